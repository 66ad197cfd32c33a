"""Triangle completion in the stable category.

The cofiber of f: M -> N is built from the short exact sequence
0 -> M -> N + I(M) -> C -> 0, where I(M) is the injective hull; since the
middle injection restricted to I(M)'s factor makes the M-component split
off injectively, C is a genuine module and the three-term composites are
stably trivial.
"""

import numpy as np

from ..errors import Mismatch
from ..ff.matrix import Matrix
from ..modrep.covers import injective_hull, syzygy
from ..modrep.homs import is_hom
from .stably import is_stably_trivial


class Triangle:
    """M --f--> N --to_cofiber--> C --connecting--> suspension(M)."""

    __slots__ = ("source", "map", "target", "cofiber", "to_cofiber",
                 "suspension", "connecting")

    def __init__(self, source, map_, target, cofiber, to_cofiber,
                 suspension, connecting):
        self.source = source
        self.map = map_
        self.target = target
        self.cofiber = cofiber
        self.to_cofiber = to_cofiber
        self.suspension = suspension
        self.connecting = connecting

    def __repr__(self):
        return (f"Triangle({self.source.name} -> {self.target.name} -> "
                f"{self.cofiber.name} -> {self.suspension.name})")


def complete_triangle(phi, M, N, check=True):
    """Complete f: M -> N to a triangle M -> N -> C -> Sigma M."""
    f = M.field
    if phi.nrows != N.dim or phi.ncols != M.dim:
        raise Mismatch("map shape does not match the modules")
    I, iota = injective_hull(M)
    D = N.direct_sum(I, name=f"({N.name}+{I.name})")
    j = Matrix(f, np.concatenate([phi.a, iota.a], axis=0))
    if j.rank() != M.dim:
        raise Mismatch("embedding into target + injective hull not injective")
    C, proj = D.quotient(j.transpose(), name=f"cofiber({M.name}->{N.name})")
    # N -> C: include N in the sum, then project
    g = Matrix(f, proj.a[:, :N.dim])
    # Sigma M = I(M) / M, and the connecting map C -> Sigma M
    S, projS = I.quotient(iota.transpose(), name=f"Sigma({M.name})")
    deltaD = Matrix(f, np.concatenate(
        [np.zeros((S.dim, N.dim), dtype=np.int32), projS.a], axis=1))
    section = proj.solve_right(Matrix.identity(f, C.dim))
    if section is None:
        raise Mismatch("quotient projection has no section")
    delta = deltaD @ section
    if check:
        if not is_hom(g, N, C):
            raise Mismatch("cofiber inclusion is not a module map")
        if not is_hom(delta, C, S):
            raise Mismatch("connecting map is not a module map")
        comp1 = g @ phi
        if np.any(comp1.a) and not is_stably_trivial(comp1, M, C):
            raise Mismatch("composite M -> N -> C is not stably trivial")
        comp2 = delta @ g
        if np.any(comp2.a) and not is_stably_trivial(comp2, N, S):
            raise Mismatch("composite N -> C -> Sigma M not stably trivial")
    return Triangle(M, phi, N, C, g, S, delta)


def stable_fiber(phi, M, N, seed=0):
    """The fiber of f up to stable isomorphism: the syzygy of the cofiber."""
    tri = complete_triangle(phi, M, N)
    F, _rows = syzygy(tri.cofiber, seed=seed)
    return F.rename(f"fiber({M.name}->{N.name})"), tri
