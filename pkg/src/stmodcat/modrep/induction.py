"""Induction and restriction of modules along a subgroup embedding.

A subgroup is handled as (sub: Group, embedding: list) as produced by
Group.as_subgroup: embedding[i] is the ambient index of sub's element i.
Induced modules use the left-coset basis (r_0 = identity first), vectors
indexed rep-major: (coset i, module coordinate j) -> i*dim + j.
"""

import numpy as np

from ..errors import Mismatch
from ..ff.matrix import Matrix
from .module import Module


def left_transversal(group, embedding):
    """Coset representatives (identity first) and the lookup tables:
    (reps, coset_of, in_h) with g = reps[coset_of[g]] * h, h in the image."""
    order = group.order
    emb = list(embedding)
    emb_set = set(emb)
    if len(emb_set) != len(emb):
        raise Mismatch("embedding is not injective")
    coset_of = [-1] * order
    reps = []
    for g in range(order):
        if coset_of[g] >= 0:
            continue
        reps.append(g)
        idx = len(reps) - 1
        for h in emb:
            coset_of[group.mul(g, h)] = idx
    if reps[0] != 0:
        raise Mismatch("identity must lead the transversal")
    return reps, coset_of


def induce_module(M, group, sub, embedding, name=None):
    """kG (x)_{kH} M with the standard coset-tensor basis."""
    if M.group is not sub:
        raise Mismatch("module is not over the given subgroup")
    f = M.field
    reps, coset_of = left_transversal(group, embedding)
    t = len(reps)
    dim = M.dim
    emb_index = {g: i for i, g in enumerate(embedding)}
    mats = {}
    for gname, g in group.gens.items():
        big = Matrix.zeros(f, t * dim, t * dim)
        a = big.a
        for i, r in enumerate(reps):
            e = group.mul(g, r)
            i2 = coset_of[e]
            h_amb = group.mul(group.inverse(reps[i2]), e)
            h = emb_index.get(h_amb)
            if h is None:
                raise Mismatch("transversal arithmetic left the subgroup")
            blk = M.action(h)
            a[i2 * dim:(i2 + 1) * dim, i * dim:(i + 1) * dim] = blk.a
        mats[gname] = big
    nm = name or f"({M.name}^{{{group.label}}})"
    return Module(group, f, mats, name=nm, check=False), reps


def restrict_module(M, sub, embedding, name=None):
    return M.restrict(sub, embedding, name=name)


def conjugate_module(M, group, s, sub, embedding, csub, cembedding, name=None):
    """The s-conjugate of a kH-module as a k[sHs^{-1}]-module.

    M lives over (sub, embedding); the result lives over (csub, cembedding)
    where cembedding enumerates sHs^{-1}; the action of x in sHs^{-1} is the
    action of s^{-1}xs on M.
    """
    emb_index = {g: i for i, g in enumerate(embedding)}
    sinv = group.inverse(s)
    mats = {}
    for gname, gi in csub.gens.items():
        amb = cembedding[gi]
        back = group.mul(group.mul(sinv, amb), s)
        h = emb_index.get(back)
        if h is None:
            raise Mismatch("conjugation left the original subgroup")
        mats[gname] = M.action(h)
    nm = name or f"({M.name})^s"
    return Module(csub, M.field, mats, name=nm, check=False)
