#!/usr/bin/env python3
"""Independent brute-force oracles for values the test suite freezes.

Everything here is deliberately written from scratch (permutation groups,
bitmask linear algebra over GF(2), tuple matrices mod p) so that the frozen
expectations in tests/_frozen/oracle_values.json do not share code with the
package being tested.

Run:  python tools/oracles/derive_values.py
"""

import json
import os
from itertools import combinations, permutations, product

OUT = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "_frozen", "oracle_values.json")


# ----------------------------------------------------------------------
# GF(16) built from scratch: bitmask polynomials modulo x^4 + x + 1.
# ----------------------------------------------------------------------

def gf16_mul(a, b):
    r = 0
    for i in range(4):
        if (b >> i) & 1:
            r ^= a << i
    for i in range(7, 3, -1):
        if (r >> i) & 1:
            r ^= (0b10011) << (i - 4)  # x^4 = x + 1
    return r


def gf16_orders():
    orders = {}
    for a in range(1, 16):
        x, n = a, 1
        while x != 1:
            x = gf16_mul(x, a)
            n += 1
        orders[a] = n
    return orders


# ----------------------------------------------------------------------
# Permutation groups: tuples acting on range(n); composition (p*q)(i)=p[q[i]].
# ----------------------------------------------------------------------

def pcompose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def pinverse(p):
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def closure(gens, identity):
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = pcompose(g, h)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return seen


def dihedral_perms(n):
    """Dihedral group of order 2n on n points."""
    ident = tuple(range(n))
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return closure([rot, ref], ident), ident


def all_subgroups(elements, identity):
    """All subgroups of a small group, by growing generated subgroups."""
    elems = sorted(elements)
    subs = {frozenset([identity])}
    frontier = [frozenset([identity])]
    while frontier:
        new = []
        for H in frontier:
            for g in elems:
                if g in H:
                    continue
                K = frozenset(closure(list(H) + [g], identity))
                if K not in subs:
                    subs.add(K)
                    new.append(K)
        frontier = new
    return subs


def conjugacy_classes_of_subgroups(group, identity):
    subs = all_subgroups(group, identity)
    group = sorted(group)
    seen, classes = set(), 0
    for H in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if H in seen:
            continue
        classes += 1
        for g in group:
            gi = pinverse(g)
            img = frozenset(pcompose(pcompose(g, h), gi) for h in H)
            seen.add(img)
    return len(subs), classes


def involution_count(H, identity):
    return sum(1 for h in H if h != identity and pcompose(h, h) == identity)


def is_abelian(H):
    H = list(H)
    return all(pcompose(a, b) == pcompose(b, a) for a in H for b in H)


# ----------------------------------------------------------------------
# SL(2, p) as 2x2 tuples (a, b, c, d) mod p.
# ----------------------------------------------------------------------

def sl2_elements(p):
    out = []
    for a, b, c, d in product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            out.append((a, b, c, d))
    return out


def mmul(p, x, y):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


def sl2_normalizer_of_lower_unitriangular(p):
    G = sl2_elements(p)
    P = {(1, 0, c, 1) for c in range(p)}
    norm = []
    for g in G:
        a, b, c, d = g
        gi = (d % p, (-b) % p, (-c) % p, a % p)  # adjugate = inverse (det 1)
        if {mmul(p, mmul(p, g, h), gi) for h in P} == P:
            norm.append(g)
    return len(norm)


# ----------------------------------------------------------------------
# A4 as even permutations of 4 points.
# ----------------------------------------------------------------------

def a4_elements():
    out = []
    for perm in permutations(range(4)):
        inv = sum(1 for i, j in combinations(range(4), 2) if perm[i] > perm[j])
        if inv % 2 == 0:
            out.append(perm)
    return out


def a4_facts():
    G = a4_elements()
    ident = (0, 1, 2, 3)
    t = (1, 0, 3, 2)  # (01)(23)
    T = closure([t], ident)
    norm = [g for g in G
            if {pcompose(pcompose(g, h), pinverse(g)) for h in T} == T]
    # double cosets V \ A4 / V
    V = closure([t, (2, 3, 0, 1)], ident)
    unseen = set(G)
    ncosets = 0
    while unseen:
        g = sorted(unseen)[0]
        coset = {pcompose(pcompose(v, g), w) for v in V for w in V}
        unseen -= coset
        ncosets += 1
    # 2-regular elements: order coprime to 2
    def order(g):
        x, n = g, 1
        while x != ident:
            x = pcompose(x, g)
            n += 1
        return n
    reg2 = sum(1 for g in G if order(g) % 2 == 1)
    return len(norm), ncosets, reg2


# ----------------------------------------------------------------------
# Stable endomorphisms of the 2-dim module over C4 in char 2, by brute force.
# M2: generator acts as the 2x2 Jordan block J; kC4: cyclic shift S on 4 pts.
# ----------------------------------------------------------------------

def mat_from_bits(bits, rows, cols):
    return [[(bits >> (r * cols + c)) & 1 for c in range(cols)] for r in range(rows)]


def matmul2(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) % 2
             for j in range(len(B[0]))] for i in range(len(A))]


def stable_end_dim_m2_c4():
    J = [[1, 1], [0, 1]]
    S = [[1 if (i - j) % 4 == 1 else 0 for j in range(4)] for i in range(4)]
    # End(M2): 2x2 X with X J = J X
    end = [mat_from_bits(b, 2, 2) for b in range(16)
           if matmul2(mat_from_bits(b, 2, 2), J) == matmul2(J, mat_from_bits(b, 2, 2))]
    # Hom(M2, kC4): 4x2 B with B J = S B ; Hom(kC4, M2): 2x4 A with A S = J A
    h_up = [mat_from_bits(b, 4, 2) for b in range(256)
            if matmul2(mat_from_bits(b, 4, 2), J) == matmul2(S, mat_from_bits(b, 4, 2))]
    h_dn = [mat_from_bits(b, 2, 4) for b in range(256)
            if matmul2(mat_from_bits(b, 2, 4), S) == matmul2(J, mat_from_bits(b, 2, 4))]
    factored = {tuple(map(tuple, matmul2(A, B))) for A in h_dn for B in h_up}

    def span_dim(mats):
        basis = []
        for m in mats:
            v = [x for row in m for x in row]
            for b in basis:
                lead = next(i for i, x in enumerate(b) if x)
                if v[lead]:
                    v = [(x + y) % 2 for x, y in zip(v, b)]
            if any(v):
                basis.append(v)
        return len(basis)

    return span_dim(end), span_dim(list(factored))


def main():
    gf16 = gf16_orders()
    d24, ident24 = dihedral_perms(12)
    sylow8 = [H for H in all_subgroups(d24, ident24) if len(H) == 8]
    syl_shapes = sorted({(is_abelian(H), involution_count(H, ident24)) for H in sylow8})

    c4, ic4 = dihedral_perms(2)  # careful: this is V! build C4 separately
    c4 = closure([(1, 2, 3, 0)], (0, 1, 2, 3))
    v4 = closure([(1, 0, 3, 2), (2, 3, 0, 1)], (0, 1, 2, 3))
    d8, ident8 = dihedral_perms(4)

    n_a4_T, a4_dcosets, a4_reg2 = a4_facts()
    end_dim, pend_dim = stable_end_dim_m2_c4()

    values = {
        "gf16_has_order_5_element": any(n == 5 for n in gf16.values()),
        "gf16_order_counts": sorted(gf16.values()),
        "d24_sylow2_count": len(sylow8),
        "d24_sylow2_shapes_abelian_involutions": [list(s) for s in syl_shapes],
        "sl2_normalizer_order": {str(p): sl2_normalizer_of_lower_unitriangular(p)
                                  for p in (2, 3, 5)},
        "c4_subgroup_conjclasses": conjugacy_classes_of_subgroups(c4, (0, 1, 2, 3))[1],
        "v4_subgroup_conjclasses": conjugacy_classes_of_subgroups(v4, (0, 1, 2, 3))[1],
        "d8_subgroup_conjclasses": conjugacy_classes_of_subgroups(d8, ident8)[1],
        "a4_normalizer_of_order2_size": n_a4_T,
        "a4_double_cosets_V_V": a4_dcosets,
        "a4_2regular_count": a4_reg2,
        "end_m2_c4_dim": end_dim,
        "pend_m2_c4_dim": pend_dim,
        "stable_end_m2_c4_dim": end_dim - pend_dim,
    }
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w") as fh:
        json.dump(values, fh, indent=2, sort_keys=True)
    print(json.dumps(values, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
