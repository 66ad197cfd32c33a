"""Ghost maps in stable module categories.

A ghost (relative to a family of test objects) is a map that becomes
invisible to every stable map out of the family: composing it with any
map from a suspension of a test object is stably trivial.  This package
provides:

 - ``families``: the three standard test families -- the trivial module
   alone, all simple modules, and the induced-trivial family generated
   by inductions from every subgroup -- with windowed or exact
   (periodicity-certified) suspension sweeps;
 - ``detect``: ghost certification for a single map, including the
   normal-Sylow restriction criterion and subgroup-by-subgroup strong
   ghost checks, plus the space of ghosts between two modules;
 - ``universal``: weakly universal ghosts out of a module (every ghost
   out of the module factors through them), built by the cheapest
   applicable route;
 - ``lengths``: generation length of a module with respect to a family
   (how many cones over family objects are needed to build it), with
   certified lower-bound witness chains and upper-bound constructions;
 - ``numbers``: the registry of closed-form ghost numbers for the group
   algebras treated here, each with a machine-checkable verification
   plan;
 - ``lemmas``: executable checks of the arithmetic laws lengths obey
   (ceiling identity for iterated ghosts, subadditivity over
   triangles).
"""

from .families import (
    TestFamily,
    TestObject,
    trivial_family,
    simples_family,
    strong_family,
    suspension_of_k,
)
from .detect import (
    GhostCertificate,
    is_ghost,
    simple_ghost_criterion,
    ghost_class_space,
)
from .universal import (
    UniversalGhost,
    universal_ghost,
    conjugation_weight_module,
)
from .lengths import (
    LengthBounds,
    length,
    ghost_length,
    simple_ghost_length,
    strong_ghost_length,
    stgl_cyclic,
    verify_ghost_chain,
    assert_in_thick_k,
)
from .numbers import (
    GhostNumberResult,
    ghost_number,
)
from .lemmas import (
    verify_ceiling_identity,
    verify_triangle_subadditivity,
    verify_length_lemmas,
)

__all__ = [
    "TestFamily",
    "TestObject",
    "trivial_family",
    "simples_family",
    "strong_family",
    "suspension_of_k",
    "GhostCertificate",
    "is_ghost",
    "simple_ghost_criterion",
    "ghost_class_space",
    "UniversalGhost",
    "universal_ghost",
    "conjugation_weight_module",
    "LengthBounds",
    "length",
    "ghost_length",
    "simple_ghost_length",
    "strong_ghost_length",
    "stgl_cyclic",
    "verify_ghost_chain",
    "assert_in_thick_k",
    "GhostNumberResult",
    "ghost_number",
    "verify_ceiling_identity",
    "verify_triangle_subadditivity",
    "verify_length_lemmas",
]
