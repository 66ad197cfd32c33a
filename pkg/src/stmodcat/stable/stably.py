"""Stable homs: Hom(M, N) modulo the maps factoring through projectives."""

import numpy as np

from ..errors import Mismatch
from ..ff.matrix import Matrix
from ..modrep.covers import projective_cover
from ..modrep.decompose import projective_free_part
from ..modrep.homs import hom_space, phom_space
from ..modrep.structure import find_isomorphism


class StableHom:
    """Hom(M, N), the subspace of projective-factoring maps, and coset
    representatives of the quotient."""

    __slots__ = ("source", "target", "hom_basis", "phom_basis",
                 "representatives", "stable_dim", "_phom_rows")

    def __init__(self, source, target, hom_basis, phom_basis,
                 representatives, phom_rows):
        self.source = source
        self.target = target
        self.hom_basis = hom_basis
        self.phom_basis = phom_basis
        self.representatives = representatives
        self.stable_dim = len(hom_basis) - len(phom_basis)
        self._phom_rows = phom_rows  # echelon basis of vectorized phoms

    def is_stably_trivial(self, phi):
        """Is the map phi (a target.dim x source.dim matrix) zero in the
        stable category?"""
        if not np.any(phi.a):
            return True
        if self._phom_rows.nrows == 0:
            return False
        v = Matrix(phi.field, phi.a.reshape(1, -1))
        return self._phom_rows.in_row_space(v)

    def __repr__(self):
        return (f"StableHom({self.source.name} -> {self.target.name}, "
                f"dim {self.stable_dim} = {len(self.hom_basis)} - "
                f"{len(self.phom_basis)})")


def stable_hom(M, N, seed=0):
    """The stable hom space: the projective-factoring subspace is realized
    as the image of composition with the projective cover surjection of N
    (a map factors through a projective iff it lifts through P(N) -> N)."""
    if M.group is not N.group:
        raise Mismatch("modules over different groups")
    if M.field.p != N.field.p or M.field.d != N.field.d:
        raise Mismatch("modules over different fields")
    f = M.field
    homs = hom_space(M, N)
    if M.dim == 0 or N.dim == 0:
        return StableHom(M, N, homs, [], [], Matrix.zeros(f, 0, 0))
    P, pi, _pieces = projective_cover(N, seed=seed)
    lifts = hom_space(M, P)
    rows = []
    for h in lifts:
        comp = pi @ h
        if np.any(comp.a):
            rows.append(comp.a.reshape(1, -1))
    if rows:
        phom_rows = Matrix(f, np.concatenate(rows, axis=0)).row_space_basis()
    else:
        phom_rows = Matrix.zeros(f, 0, M.dim * N.dim)
    phom_basis = [Matrix(f, phom_rows.a[i].reshape(N.dim, M.dim))
                  for i in range(phom_rows.nrows)]
    reps = []
    cur = phom_rows
    for h in homs:
        v = Matrix(f, h.a.reshape(1, -1))
        stacked = cur.vstack(v)
        if stacked.rank() > cur.nrows:
            reps.append(h)
            cur = stacked.row_space_basis()
    return StableHom(M, N, homs, phom_basis, reps, phom_rows)


def stable_hom_dim(M, N, seed=0, fast=True):
    """dim Hom(M,N) - dim PHom(M,N); the fast route uses the transfer-image
    realization of the projective-factoring subspace."""
    if fast:
        homs = hom_space(M, N)
        ph = phom_space(M, N)
        return len(homs) - ph.dim
    return stable_hom(M, N, seed=seed).stable_dim


def is_stably_trivial(phi, M, N):
    """Does the map phi: M -> N factor through a projective module?"""
    if not np.any(phi.a):
        return True
    return phom_space(M, N).contains(phi)


def stably_isomorphic(M, N, seed=0):
    """(boolean, witness): stable isomorphism = isomorphism of the
    projective-free parts."""
    pfM, infoM = projective_free_part(M, seed=seed)
    pfN, infoN = projective_free_part(N, seed=seed)
    witness = {
        "source_projective_dims": infoM["projective_dims"],
        "target_projective_dims": infoN["projective_dims"],
        "source_core_dim": pfM.dim,
        "target_core_dim": pfN.dim,
        "core_isomorphism": None,
    }
    if pfM.dim != pfN.dim:
        return False, witness
    if pfM.dim == 0:
        witness["core_isomorphism"] = Matrix.zeros(M.field, 0, 0)
        return True, witness
    iso = find_isomorphism(pfM, pfN, seed=seed)
    if iso is None:
        return False, witness
    witness["core_isomorphism"] = iso
    return True, witness
