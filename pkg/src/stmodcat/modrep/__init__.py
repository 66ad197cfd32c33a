"""Modular representations: modules, homs, structure, covers, decomposition,
induction, and the named catalogs."""

from .catalogs import (Catalog, a4_characters, a4_indecomposables, catalog,
                       character_module, cql_indecomposables, cql_simple,
                       cyclic_indecomposables, has_cyclic_normal_sylow,
                       jordan_module, klein_band, klein_four_indecomposables,
                       sl2_L_catalog, sl2_L_character, sl2_L_subgroup,
                       sl2_natural, sl2_simples, sym_power_module,
                       uniserial_indecomposables)
from .covers import (cosyzygy, injective_hull, projective_cover,
                     projective_indecomposables, syzygy, syzygy_power)
from .decompose import (DecompositionReport, Summand, decompose,
                        decomposition_report, is_indecomposable,
                        match_up_to_iso, projective_free_part)
from .homs import (PHomSpace, end_algebra, hom_space, is_hom,
                   module_generators, phom_space, stable_end_dim,
                   stable_hom_basis)
from .induction import (conjugate_module, induce_module, left_transversal,
                        restrict_module)
from .module import Module
from .structure import (composition_factors, find_isomorphism,
                        find_proper_submodule, is_projective, is_simple,
                        loewy_length, modules_isomorphic_plain,
                        projective_rank, radical, radical_series,
                        require_split, simple_modules, socle, socle_series,
                        top)

__all__ = [
    "Module", "Summand", "PHomSpace", "Catalog", "DecompositionReport",
    "hom_space", "end_algebra", "phom_space", "stable_hom_basis",
    "stable_end_dim", "is_hom", "module_generators",
    "composition_factors", "find_isomorphism", "find_proper_submodule",
    "is_simple",
    "simple_modules", "radical", "socle", "top", "radical_series",
    "socle_series", "loewy_length", "is_projective", "projective_rank",
    "modules_isomorphic_plain", "require_split",
    "projective_cover", "projective_indecomposables", "syzygy", "cosyzygy",
    "syzygy_power", "injective_hull",
    "decompose", "decomposition_report", "is_indecomposable",
    "projective_free_part", "match_up_to_iso",
    "induce_module", "restrict_module", "conjugate_module",
    "left_transversal",
    "catalog", "jordan_module", "character_module", "cyclic_indecomposables",
    "klein_band", "klein_four_indecomposables", "a4_characters",
    "a4_indecomposables", "cql_simple", "cql_indecomposables",
    "uniserial_indecomposables", "has_cyclic_normal_sylow", "sl2_natural",
    "sym_power_module", "sl2_simples", "sl2_L_subgroup", "sl2_L_character",
    "sl2_L_catalog",
]
