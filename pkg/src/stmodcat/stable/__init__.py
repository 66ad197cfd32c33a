"""The stable module category: homs modulo projectives, triangles, shifts."""

from .induction import (adjunction_check, e0_unit_split_check, induce,
                        mackey_check, restrict, unit_counit)
from .stably import (StableHom, is_stably_trivial, stable_hom,
                     stable_hom_dim, stably_isomorphic)
from .tate import (PeriodicityCertificate, SuspensionCache, omega_period,
                   omega_power_of_k, suspension_cache)
from .triangles import Triangle, complete_triangle, stable_fiber

__all__ = [
    "StableHom", "stable_hom", "stable_hom_dim", "is_stably_trivial",
    "stably_isomorphic",
    "Triangle", "complete_triangle", "stable_fiber",
    "PeriodicityCertificate", "SuspensionCache", "omega_period",
    "omega_power_of_k", "suspension_cache",
    "induce", "restrict", "unit_counit", "adjunction_check",
    "e0_unit_split_check", "mackey_check",
]
