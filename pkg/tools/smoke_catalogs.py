"""Smoke checks for modrep.catalogs and blocks (not part of the test suite)."""

import sys

sys.path.insert(0, "src")

import numpy as np

from stmodcat.blocks import (AlgebraElement, block_decomposition, block_of,
                             cql_idempotent, d2ql_eprime,
                             d2ql_principal_vector, principal_idempotent,
                             thick_k_equals_B0, verify_alpha_iso)
from stmodcat.errors import FieldTooSmall, NotFiniteType
from stmodcat.ff.field import FF
from stmodcat.groups import build_group
from stmodcat.modrep import (catalog, cql_indecomposables, cql_simple,
                             cyclic_indecomposables, decompose, hom_space,
                             is_indecomposable, jordan_module,
                             klein_four_indecomposables,
                             modules_isomorphic_plain, radical, restrict_module,
                             simple_modules, sl2_L_catalog, sl2_L_subgroup,
                             sl2_natural, sl2_simples, sym_power_module,
                             syzygy_power, top, uniserial_indecomposables,
                             a4_indecomposables, a4_characters, Module,
                             induce_module, is_projective)

PASS = 0


def check(label, ok):
    global PASS
    if not ok:
        print(f"FAIL: {label}")
        sys.exit(1)
    PASS += 1
    print(f"ok: {label}")


# --- cyclic catalogs
f2 = FF(2)
f3 = FF(3)
f4 = FF(2, 2)
c8 = build_group("c8")
cat8 = cyclic_indecomposables(c8, f2)
check("C8 catalog has 8 modules", len(cat8) == 8 and cat8.complete)
m5 = cat8.by_name("M5")
R = radical(m5)
sub, _ = m5.submodule(R)
check("rad(M5) = M4 over C8",
      sub.dim == 4 and modules_isomorphic_plain(sub, cat8.by_name("M4")))

# --- principal idempotents
d12 = build_group("d12")
e0 = principal_idempotent(d12, f2)
expect = np.zeros(12, dtype=np.int32)
expect[[0, 2, 4]] = 1  # 1 + x^2 + x^4
check("e0(D12) = 1 + x^2 + x^4", np.array_equal(e0.coeffs, expect))
check("e0(D12) matches the explicit rotation formula",
      np.array_equal(e0.coeffs, d2ql_principal_vector(d12, f2, 2, 3).coeffs))

a4 = build_group("a4")
e0a4 = principal_idempotent(a4, f2)
one = AlgebraElement.one(a4, f2)
check("e0(A4) = 1", e0a4 == one)

c4xc3 = build_group("c4xc3")
e0prod = principal_idempotent(c4xc3, f2)
# (1/3)(1 + b + b^2): b is the C3 part; indices j for (1, b^j), inv(3)=1 mod 2
idx = [c4xc3.gens["g2"]]
vec = np.zeros(12, dtype=np.int32)
b = c4xc3.gens["g2"]
cur = 0
for _ in range(3):
    vec[cur] = 1
    cur = int(c4xc3.table[cur, b])
check("e0(C4xC3) = 1 + b + b^2", np.array_equal(e0prod.coeffs, vec))

# --- block decompositions
try:
    block_decomposition(build_group("c3"), f2)
    check("kC3/GF(2) raises FieldTooSmall", False)
except FieldTooSmall as e:
    check("kC3/GF(2) raises FieldTooSmall naming degree 2", "2^2" in str(e))

c12 = build_group("c12")
B = block_decomposition(c12, f4)
check("kC12 over GF(4) has 3 blocks", len(B) == 3)
for i in range(3):
    ei = cql_idempotent(c12, f4, 4, 3, i)
    check(f"e_{i} formula is one of the computed blocks",
          any(ei == e for e in B.idempotents))
check("principal block of kC12 = e_0 formula",
      B.idempotents[B.principal_index] == cql_idempotent(c12, f4, 4, 3, 0))

d12B = block_decomposition(d12, f4)
check("kD12 over GF(4) has 2 blocks", len(d12B) == 2)
ep1 = d2ql_eprime(d12, f4, 2, 3, 1)
check("e'_1 = e_1 + e_{l-1} is the non-principal block of kD12",
      any(ep1 == e for i, e in enumerate(d12B.idempotents)
          if i != d12B.principal_index))
check("block dims of kD12 are 4 and 8",
      sorted(d12B.block_dims) == [4, 8])
check("one simple per block of kD12", d12B.simples_per_block == [1, 1])

# conjugation by y maps e_i to e_{l-i}
e1 = None
from stmodcat.blocks import d2ql_rotation_idempotent
e1 = d2ql_rotation_idempotent(d12, f4, 2, 3, 1)
e2 = d2ql_rotation_idempotent(d12, f4, 2, 3, 2)
y = 6  # index of y in D12 (i + n*e with i=0, e=1, n=6)
check("conjugation by y swaps e_1 and e_2", e1.conjugate_by(y) == e2)

# --- alpha iso
for (q, l) in ((2, 3), (4, 3), (2, 5)):
    fld = f4 if l == 3 else FF(2, 4)
    ok, wit = verify_alpha_iso(q, l, fld)
    check(f"alpha: kD{2*q} -> e0 kD{2*q*l} iso (q={q}, l={l})",
          ok and wit["dim_e0_block"] == 2 * q)

# --- thick k = B0 criterion
check("thick k criterion holds for A4 at p=2", thick_k_equals_B0(a4, f2))
check("thick k criterion holds for D12 at p=2", thick_k_equals_B0(d12, f2))
check("thick k criterion holds for C8 (p-group)", thick_k_equals_B0(c8, f2))
sl23 = build_group("sl2_3")
check("SL(2,3) at p=3: Sylow is TI; criterion true",
      thick_k_equals_B0(sl23, f3))

# --- C_ql catalogs
c12cat = cql_indecomposables(c12, f4, 4, 3)
check("kC12 catalog: 12 indecomposables", len(c12cat) == 12
      and c12cat.complete)
check("all kC12 catalog entries indecomposable",
      all(is_indecomposable(m) for m in c12cat))
names = {m.name for m in c12cat}
check("kC12 catalog names", "e0(M1ind)" in names and "e2(M4ind)" in names)
# block membership: e_i(M_n) is in block i
m21 = c12cat.by_name("e1(M2ind)")
check("e1(M2ind) lies in block e_1",
      block_of(m21, B) == [i for i, e in enumerate(B.idempotents)
                           if e == cql_idempotent(c12, f4, 4, 3, 1)][0])
k1 = cql_simple(c12, f4, 4, 3, 1)
check("k_1 = e1(M1ind)",
      modules_isomorphic_plain(k1, c12cat.by_name("e1(M1ind)")))

# --- Klein four catalog
v4 = build_group("v4")
vcat = klein_four_indecomposables(v4, f2, 6)
dims = sorted(m.dim for m in vcat)
check("V4 catalog to dim 6 collects odd zigzags and even bands",
      dims.count(1) == 1 and 3 in dims and 5 in dims and 2 in dims)
check("V4 catalog entries indecomposable",
      all(is_indecomposable(m) for m in vcat))
distinct = True
for i in range(len(vcat.modules)):
    for j in range(i + 1, len(vcat.modules)):
        a, bm = vcat.modules[i], vcat.modules[j]
        if a.dim == bm.dim and modules_isomorphic_plain(a, bm):
            distinct = False
check("V4 catalog entries pairwise non-isomorphic", distinct)
try:
    catalog(v4, f2, "indecomposables", dim_bound=4)
    check("catalog(V4) raises NotFiniteType", False)
except NotFiniteType as e:
    check("catalog(V4) raises NotFiniteType with bounded catalog",
          e.catalog is not None and len(e.catalog) > 0)

# --- A4 catalog
try:
    catalog(a4, f4, "indecomposables", dim_bound=8)
    acat = None
except NotFiniteType as e:
    acat = e.catalog
check("A4 catalog to dim 8 exists", acat is not None and len(acat) >= 9)
k, kz, kz2 = a4_characters(a4, f4)
V, emb = a4.as_subgroup(a4.sylow(2))
indk, _ = induce_module(Module.trivial(V, f4), a4, V, emb)
parts = decompose(indk)
check("k induced from V4 to A4 splits as k + k_z + k_z2",
      sorted(p.module.dim for p in parts) == [1, 1, 1]
      and sum(1 for p in parts
              if modules_isomorphic_plain(p.module, kz)) == 1)
check("A4 catalog contains the three characters",
      all(any(m.dim == 1 and modules_isomorphic_plain(m, ch) for m in acat)
          for ch in (k, kz, kz2)))
check("A4 catalog names the syzygy twists",
      any(m.name.startswith("O^1(") for m in acat)
      and any(m.name.startswith("O^-1(") for m in acat))

# --- uniserial catalogs (cyclic normal Sylow)
d18 = build_group("d18")
u18 = uniserial_indecomposables(d18, f3)
check("kD18 catalog: 2 simples x radical length 9 = 18 modules",
      len(u18) == 18 and u18.complete)
check("kD18 catalog entries indecomposable",
      all(is_indecomposable(m) for m in u18))

# --- SL(2,p)
for p, fl in ((3, f3), (5, FF(5))):
    G = build_group(f"sl2_{p}")
    sims = sl2_simples(G, fl, p)
    check(f"SL(2,{p}) symmetric powers have dims 1..{p}",
          [m.dim for m in sims] == list(range(1, p + 1)))
    from stmodcat.modrep.structure import is_simple
    check(f"SL(2,{p}) symmetric powers are simple",
          all(is_simple(m) for m in sims))
    check(f"V_{p} is projective", is_projective(sims[-1]))
    L, emb, a_val = sl2_L_subgroup(G, p)
    check(f"|L| = p(p-1) for SL(2,{p})", L.order == p * (p - 1))
    lcat, chars = sl2_L_catalog(L, fl, a_val, p)
    check(f"L catalog for SL(2,{p}): p(p-1) = {p*(p-1)} modules",
          len(lcat) == p * (p - 1) and lcat.complete)
    # V_i restricted to L is the uniserial M(i, S_{i-1})
    for i in (2, p):
        Vi = restrict_module(sims[i - 1], L, emb, name=f"V{i}|L")
        target = lcat.by_name(f"M({i},S{(i - 1) % (p - 1)})")
        check(f"V_{i} restricted to L = M({i},S{i-1}) for p={p}",
              modules_isomorphic_plain(Vi, target))
    # W = Omega^2(k) is the character S_{-2}, index -2 mod (p-1)
    W = syzygy_power(Module.trivial(L, fl), 2)
    check(f"Omega^2(k) over L is S_(-2) for p={p}",
          W.dim == 1 and modules_isomorphic_plain(W, chars[(-2) % (p - 1)]))

print(f"all {PASS} catalog/block smoke checks passed")
