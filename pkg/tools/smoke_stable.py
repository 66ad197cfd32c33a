"""Smoke checks for the stable-category layer."""

import json
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from stmodcat.ff.field import GF
from stmodcat.ff.matrix import Matrix
from stmodcat.groups import build_group
from stmodcat.modrep import (a4_characters, cyclic_indecomposables,
                             decompose, induce_module, jordan_module,
                             modules_isomorphic_plain, restrict_module,
                             sl2_L_subgroup, uniserial_indecomposables)
from stmodcat.modrep.covers import cosyzygy
from stmodcat.modrep.homs import is_hom, phom_space
from stmodcat.modrep.module import Module
from stmodcat.stable import (adjunction_check, complete_triangle,
                             e0_unit_split_check, is_stably_trivial,
                             mackey_check, omega_period, omega_power_of_k,
                             stable_fiber, stable_hom, stable_hom_dim,
                             stably_isomorphic, unit_counit)

PASS = 0
FAIL = 0


def check(label, ok):
    global PASS, FAIL
    if ok:
        PASS += 1
        print(f"  ok  {label}")
    else:
        FAIL += 1
        print(f" FAIL {label}")


t0 = time.time()
frozen = json.loads(
    (Path(__file__).resolve().parents[1] / "tests" / "_frozen"
     / "oracle_values.json").read_text())

f2 = GF(2)
f3 = GF(3)
f4 = GF(2, 2)
f5 = GF(5)
c2 = build_group("C2")
c4 = build_group("C4")
c8 = build_group("C8")
c9 = build_group("C9")
d8 = build_group("D8")
d12 = build_group("D12")
a4 = build_group("A4")
g43 = build_group("C4xC3")

# --- stable endomorphisms of M2 over C4, against the frozen values
m2 = jordan_module(c4, f2, 2)
sh = stable_hom(m2, m2)
check("stable End(M2) over C4 dim == frozen",
      sh.stable_dim == frozen["stable_end_m2_c4_dim"])
check("End(M2) over C4 dim == frozen",
      len(sh.hom_basis) == frozen["end_m2_c4_dim"])
check("PEnd(M2) over C4 dim == frozen",
      len(sh.phom_basis) == frozen["pend_m2_c4_dim"])
check("representative count matches stable dim",
      len(sh.representatives) == sh.stable_dim)

# --- the cover route and the transfer route agree on the same subspace
pairs = []
cat8 = cyclic_indecomposables(c8, f2)
for a in (1, 3, 5, 8):
    for b in (2, 3, 8):
        pairs.append((cat8.by_name(f"M{a}"), cat8.by_name(f"M{b}")))
cat12 = uniserial_indecomposables(d12, f3)
mods12 = list(cat12)[:4]
pairs.extend((a, b) for a in mods12[:2] for b in mods12[2:])
agree = True
for a, b in pairs:
    cover = stable_hom(a, b)
    transfer = phom_space(a, b)
    if len(cover.phom_basis) != transfer.dim:
        agree = False
        break
    if not all(transfer.contains(x) for x in cover.phom_basis):
        agree = False
        break
    if cover.stable_dim != stable_hom_dim(a, b):
        agree = False
        break
check(f"cover-route PHom == transfer-route PHom on {len(pairs)} pairs",
      agree)

# --- stable triviality
ident = Matrix.identity(f2, 2)
check("id_{M2} not stably trivial", not is_stably_trivial(ident, m2, m2))
incl = Matrix(f2, np.array([[1, 0], [0, 1], [0, 0], [0, 0]], dtype=np.int32))
proj = Matrix(f2, np.array([[0, 0, 1, 0], [0, 0, 0, 1]], dtype=np.int32))
check("map M2 -> M4 -> M2 through the free module is stably trivial",
      is_stably_trivial(proj @ incl, m2, m2))

# --- stably_isomorphic strips projectives
m3 = jordan_module(c4, f2, 3)
m4 = jordan_module(c4, f2, 4)
ok, wit = stably_isomorphic(m3.direct_sum(m4), m3)
check("M3 + M4 stably iso to M3 over C4",
      ok and wit["source_projective_dims"] == [4]
      and wit["core_isomorphism"] is not None)
ok2, _ = stably_isomorphic(m3, m2)
check("M3 not stably iso to M2", not ok2)

# --- triangle: cofiber of the zero map is target + suspension(source)
zero = Matrix.zeros(f2, 3, 2)
tri = complete_triangle(zero, m2, m3)
ok, _ = stably_isomorphic(tri.cofiber, m3.direct_sum(cosyzygy(m2)))
check("cofiber(0: M2 -> M3) stably == M3 + Sigma(M2) over C4", ok)

# --- triangle: fiber of (g-1) acting on M_n over C8 is k + Sigma k
m5 = cat8.by_name("M5")
phi = Matrix(f2, (m5.mats["g"].a + np.eye(5, dtype=np.int32)) % 2)  # g - 1
F, _tri2 = stable_fiber(phi, m5, m5)
k8 = Module.trivial(c8, f2)
sigma_k8 = omega_power_of_k(c8, f2, -1)
check("Sigma k over C8 has dim 7", sigma_k8.dim == 7)
ok, _ = stably_isomorphic(F, k8.direct_sum(sigma_k8))
check("fiber(g-1 on M5) stably == k + Sigma k over C8", ok)

# --- suspension cache and periodicity
cert = omega_period(c4, f2, bound=8)
check("omega period of k over C4 is 2", cert is not None and cert.period == 2)
cert2 = omega_period(c2, f2, bound=8)
check("omega period of k over C2 is 1",
      cert2 is not None and cert2.period == 1)
cert9 = omega_period(c9, f3, bound=8)
check("omega period of k over C9 is 2",
      cert9 is not None and cert9.period == 2)
check("Omega^17 k over C4 == Omega^1 k (mod period)",
      omega_power_of_k(c4, f2, 17) is omega_power_of_k(c4, f2, 1))
check("no omega period over D8 within 16",
      omega_period(d8, f2, bound=16) is None)
sl5 = build_group("SL2_5")
L5, emb5, aval5 = sl2_L_subgroup(sl5, 5)
certL = omega_period(L5, f5, bound=8)
check("omega period of k over L < SL(2,5) is 4",
      certL is not None and certL.period == 4)

# --- kB over C4 x C3: stable End dim |B| upstairs, |B|^2 over the Sylow
shift = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=np.int32)
kB = Module(g43, f2, {"g1": Matrix.identity(f2, 3),
                      "g2": Matrix(f2, shift)}, name="kB")
check("stable End(kB) over C4xC3 has dim 3", stable_hom_dim(kB, kB) == 3)
A, embA = g43.as_subgroup(g43.sylow(2), label="C4<C4xC3")
kB_down = restrict_module(kB, A, embA)
check("stable End(kB restricted to C4) has dim 9",
      stable_hom_dim(kB_down, kB_down) == 9)

# --- unit/counit + adjunction
V4, embV = a4.as_subgroup(a4.sylow(2), label="V4<A4")
kV = Module.trivial(V4, f4)
R, eta, eps = unit_counit(kV, a4, embV)
check("counit o unit = id", (eps @ eta) == Matrix.identity(f4, 1))
check("unit is a module map over V4", is_hom(eta, kV, R))
check("counit is a module map over V4", is_hom(eps, R, kV))

chars = a4_characters(a4, f4)
okadj, rep = adjunction_check(kV, a4, embV, chars[1])
check(f"adjunction dims for (k_V4, k_z): {rep}", okadj)
C6, embH = d12.as_subgroup(list(range(6)), label="C6<D12")
kH = Module.trivial(C6, f3)
okadj2, rep2 = adjunction_check(kH, d12, embH, list(cat12)[3])
check(f"adjunction dims for (k_C6, {list(cat12)[3].name}): {rep2}", okadj2)

# --- e0 unit split checks: scalar = inverse of the p-regular count
ok, c = e0_unit_split_check(kV, a4, embV)
check(f"e0 split over A4 (scalar {c})", ok and c == 1)
C3, embC3 = d12.as_subgroup([0, 2, 4], label="C3<D12")
ok, c = e0_unit_split_check(Module.trivial(C3, f3), d12, embC3)
check(f"e0 split over D12 at p=3 (scalar {c})", ok and c == 2)
ok, c = e0_unit_split_check(jordan_module(A, f2, 2), g43, embA)
check(f"e0 split over C4xC3 (scalar {c})", ok and c == 1)

# --- Mackey double-coset checks
okm, repm = mackey_check(a4, V4, embV, V4, embV, kV)
check(f"mackey A4 / V4,V4 reps {repm['double_coset_reps']}",
      okm and len(repm["double_coset_reps"])
      == frozen["a4_double_cosets_V_V"])
C2d, embC2d = d12.as_subgroup([0, 6], label="C2<D12")
okm2, _ = mackey_check(d12, C6, embH, C2d, embC2d,
                       Module.trivial(C2d, f4))
check("mackey D12 / C6, C2", okm2)
A4full, embFull = a4.as_subgroup(list(range(12)))
okm3, _ = mackey_check(a4, A4full, embFull, V4, embV, kV)
check("mackey with L = G is the induced module itself", okm3)
C2in8, embC2in8 = c8.as_subgroup([0, 4])
C4in8, embC4in8 = c8.as_subgroup([0, 2, 4, 6])
okm4, _ = mackey_check(c8, C2in8, embC2in8, C4in8, embC4in8,
                       jordan_module(C4in8, f2, 2))
check("mackey C8 / C2, C4 with M2", okm4)

# --- restriction to the Sylow, induced back, contains the module
for M in (chars[1], chars[2]):
    down = restrict_module(M, V4, embV)
    up, _ = induce_module(down, a4, V4, embV)
    parts = [s.module for s in decompose(up)]
    check(f"{M.name} divides its Sylow-restriction induced back",
          any(p.dim == M.dim and modules_isomorphic_plain(p, M)
              for p in parts))

print(f"\n{PASS} passed, {FAIL} failed in {time.time() - t0:.1f}s")
sys.exit(1 if FAIL else 0)
