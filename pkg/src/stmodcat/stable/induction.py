"""Induction/restriction as stable-category operations.

Thin wrappers around the coset-basis change-of-group functors, plus the
adjunction unit/counit, the principal-block splitting check for a Sylow
subgroup, and the double-coset decomposition check for a restricted
induced module.
"""

import numpy as np

from ..blocks import principal_idempotent
from ..errors import Mismatch
from ..ff.matrix import Matrix
from ..modrep.decompose import decompose, match_up_to_iso
from ..modrep.induction import (conjugate_module, induce_module,
                                restrict_module)
from ..modrep.structure import modules_isomorphic_plain
from .stably import stable_hom_dim


def induce(M, group, embedding, name=None):
    """M induced from its own group (a subgroup of `group`) up to `group`."""
    ind, _reps = induce_module(M, group, M.group, embedding, name=name)
    return ind


def restrict(M, sub, embedding, name=None):
    """M restricted along the subgroup embedding."""
    return restrict_module(M, sub, embedding, name=name)


def unit_counit(M, group, embedding):
    """(M induced-then-restricted, unit, counit) for M over a subgroup H.

    The unit sends m to the coset-0 slot (the identity's coset); the counit
    keeps the coset-0 slot and kills every other coset (those representatives
    lie outside H).  Composing counit after unit is the identity of M.
    """
    H = M.group
    ind, reps = induce_module(M, group, H, embedding)
    if reps[0] != 0:
        raise Mismatch("transversal does not start at the identity")
    R = restrict_module(ind, H, embedding,
                        name=f"(({M.name})^{group.label})|H")
    f = M.field
    t = len(reps)
    eta = Matrix(f, np.concatenate(
        [np.eye(M.dim, dtype=np.int32)] +
        [np.zeros((M.dim, M.dim), dtype=np.int32)] * (t - 1), axis=0))
    eps = Matrix(f, np.concatenate(
        [np.eye(M.dim, dtype=np.int32)] +
        [np.zeros((M.dim, M.dim), dtype=np.int32)] * (t - 1), axis=1))
    return R, eta, eps


def adjunction_check(M, group, embedding, N, seed=0):
    """Stable-hom dimensions agree across induction in both directions.

    M lives over a subgroup H of `group`; N lives over `group`.  Checks
    dim Hom(M^G, N) == dim Hom(M, N|H) and dim Hom(N, M^G) == dim Hom(N|H, M),
    all taken in the stable category.
    """
    H = M.group
    ind, _ = induce_module(M, group, H, embedding)
    res = restrict_module(N, H, embedding)
    lhs1 = stable_hom_dim(ind, N, seed=seed)
    rhs1 = stable_hom_dim(M, res, seed=seed)
    lhs2 = stable_hom_dim(N, ind, seed=seed)
    rhs2 = stable_hom_dim(res, M, seed=seed)
    ok = lhs1 == rhs1 and lhs2 == rhs2
    return ok, {"ind_to_N": (lhs1, rhs1), "N_to_ind": (lhs2, rhs2)}


def e0_unit_split_check(M, group, embedding, seed=0):
    """Unit into the principal-block part of the induced module splits.

    For M over a Sylow p-subgroup P of `group`, the composite

        M --unit--> (M^G)|P --counit--> M

    with the principal idempotent acting in the middle equals c * id, where
    c is the inverse of the number of p-regular elements (mod p).  Returns
    (ok, scalar c as a field element).
    """
    f = M.field
    P = M.group
    if group.p_part(f.p) != P.order:
        raise Mismatch("module must live over a full Sylow subgroup")
    e0 = principal_idempotent(group, f)
    ind, reps = induce_module(M, group, P, embedding)
    if reps[0] != 0:
        raise Mismatch("transversal does not start at the identity")
    act = ind.algebra_action(e0.coeffs)
    t = len(reps)
    eta = Matrix(f, np.concatenate(
        [np.eye(M.dim, dtype=np.int32)] +
        [np.zeros((M.dim, M.dim), dtype=np.int32)] * (t - 1), axis=0))
    eps = Matrix(f, np.concatenate(
        [np.eye(M.dim, dtype=np.int32)] +
        [np.zeros((M.dim, M.dim), dtype=np.int32)] * (t - 1), axis=1))
    comp = (eps @ act) @ eta
    n_reg = len(group.p_regular_elements(f.p)) % f.p
    c = pow(n_reg, -1, f.p)
    want = Matrix.identity(f, M.dim).scale(c)
    return comp == want, c


def _double_coset_reps(group, left_elts, right_elts):
    seen = bytearray(group.order)
    reps = []
    table = group.table
    for g in range(group.order):
        if seen[g]:
            continue
        reps.append(g)
        for a in left_elts:
            ag = int(table[a, g])
            for b in right_elts:
                seen[int(table[ag, b])] = 1
    return reps


def mackey_check(group, lsub, lemb, hsub, hemb, V, seed=0):
    """Restricting an induced module matches its double-coset decomposition.

    V lives over hsub.  The module (V^G)|L is decomposed into
    indecomposables and matched, as a multiset up to isomorphism, against
    the direct sum over double-coset representatives s of the conjugated
    module restricted to L meet sHs^-1 and induced back up to L.
    Returns (ok, report).
    """
    if V.group is not hsub:
        raise Mismatch("module must live over the given subgroup")
    ind, _ = induce_module(V, group, hsub, hemb)
    left = restrict_module(ind, lsub, lemb)
    left_parts = [s.module for s in decompose(left, seed=seed)]

    lpos = {a: i for i, a in enumerate(lemb)}
    reps = _double_coset_reps(group, lemb, hemb)
    right_parts = []
    pieces = []
    for s in reps:
        camb = sorted(group.conjugate(s, h) for h in hemb)
        csub, cemb = group.as_subgroup(camb)
        conj = conjugate_module(V, group, s, hsub, hemb, csub, cemb)
        inter = sorted(set(lemb) & set(cemb))
        isub, iemb = group.as_subgroup(inter)
        cpos = {a: i for i, a in enumerate(cemb)}
        res = restrict_module(conj, isub, [cpos[a] for a in iemb])
        piece, _ = induce_module(res, lsub, isub, [lpos[a] for a in iemb])
        pieces.append((s, piece.dim))
        right_parts.extend(x.module for x in decompose(piece, seed=seed))

    dims_ok = (sum(m.dim for m in left_parts)
               == sum(m.dim for m in right_parts))
    ok = dims_ok and match_up_to_iso(
        left_parts, right_parts,
        lambda a, b: a.dim == b.dim
        and modules_isomorphic_plain(a, b, seed=seed))
    report = {
        "double_coset_reps": [group.element_names[s] for s, _ in pieces],
        "piece_dims": [d for _, d in pieces],
        "left_summand_dims": sorted(m.dim for m in left_parts),
        "right_summand_dims": sorted(m.dim for m in right_parts),
    }
    return ok, report
