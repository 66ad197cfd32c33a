import json
import sys

import numpy as np

from stmodcat.errors import FieldTooSmall
from stmodcat.ff import GF, Matrix
from stmodcat.groups import build_group
from stmodcat.modrep import (Module, decompose, end_algebra, hom_space,
                             injective_hull, is_projective, is_simple,
                             modules_isomorphic_plain, phom_space,
                             projective_cover, projective_indecomposables,
                             projective_free_part, radical, require_split,
                             simple_modules, socle, stable_hom_basis, syzygy,
                             syzygy_power, top)

ok = 0


def check(name, cond):
    global ok
    if not cond:
        print(f"FAIL {name}")
        sys.exit(1)
    ok += 1
    print(f"ok   {name}")


k2 = GF(2)
C4 = build_group("c4")


def jordan(field, group, size):
    a = np.eye(size, dtype=np.int32)
    for i in range(size - 1):
        a[i + 1, i] = 1
    gname = next(iter(group.gens))
    return Module(group, field, {gname: Matrix(field, a)}, name=f"M{size}")


M2 = jordan(k2, C4, 2)
M3 = jordan(k2, C4, 3)
frozen = json.load(open("/root/pkg/tests/_frozen/oracle_values.json"))

ends = end_algebra(M2)
check("End(M2/C4) dim", len(ends) == frozen["end_m2_c4_dim"])
ph = phom_space(M2, M2)
check("PEnd(M2/C4) dim", ph.dim == frozen["pend_m2_c4_dim"])
reps, hdim, pdim = stable_hom_basis(M2, M2)
check("stable End(M2/C4) dim", len(reps) == frozen["stable_end_m2_c4_dim"])

kk = Module.trivial(C4, k2)
reg4 = Module.regular(C4, k2)
check("Hom(kC4, M2) dim = 2", len(hom_space(reg4, M2)) == 2)
check("PHom(k,k) over C4 is 0", phom_space(kk, kk).dim == 0)
check("stable End(k) dim 1", len(stable_hom_basis(kk, kk)[0]) == 1)

check("rad(kC4) dim 3", radical(reg4).nrows == 3)
check("soc(kC4) dim 1", socle(reg4).nrows == 1)
check("kC4 projective", is_projective(reg4))
check("M2 not projective", not is_projective(M2))
check("M3 not projective", not is_projective(M3))

om, _K = syzygy(kk)
check("Omega(k/C4) dim 3", om.dim == 3)
check("Omega(k/C4) iso M3", modules_isomorphic_plain(om, M3))
om_inv = syzygy_power(kk, -1)
check("Omega^-1(k/C4) dim 3", om_inv.dim == 3)
check("Omega^-1(k/C4) iso M3", modules_isomorphic_plain(om_inv, M3))
om2 = syzygy_power(kk, 2)
check("Omega^2(k/C4) iso M1", om2.dim == 1)

mix = M3.direct_sum(M2, jordan(k2, C4, 4), M2)
parts = decompose(mix)
dims = sorted(s.module.dim for s in parts)
check("Jordan decompose dims", dims == [2, 2, 3, 4])
for s in parts:
    check(f"summand dim {s.module.dim} incl/proj split",
          (s.projection @ s.inclusion).is_invertible())
pf, info = projective_free_part(mix)
check("projective-free part strips M4", sorted(info["projective_dims"]) == [4]
      and pf.dim == 7)

I4, iota = injective_hull(kk)
check("I(k/C4) = kC4", I4.dim == 4 and is_projective(I4))
check("iota nonzero injective", iota.rank() == 1)

# A4 over GF(4): split; 3 simples of dim 1; PIMs of dim 4
k4 = GF(2, 2)
A4 = build_group("a4")
require_split(A4, k4)
simps = simple_modules(A4, k4)
check("A4/GF(4): three simples", [s.dim for s in simps] == [1, 1, 1])
try:
    require_split(A4, k2)
    check("A4/GF(2) nonsplit detected", False)
except FieldTooSmall:
    check("A4/GF(2) nonsplit detected", True)

pims = projective_indecomposables(A4, k4)
check("A4/GF(4): three PIMs of dim 4",
      sorted(p.module.dim for p in pims) == [4, 4, 4]
      and all(p.multiplicity == 1 for p in pims))

kA4 = Module.trivial(A4, k4)
P0, pi0, pieces0 = projective_cover(kA4)
check("cover of k(A4) is P0 (dim 4)", P0.dim == 4 and pi0.rank() == 1)
omA4, _ = syzygy(kA4)
check("Omega(k/A4) dim 3", omA4.dim == 3)

# regular module of A4 decomposes into 3 PIMs
regA4 = Module.regular(A4, k4)
partsA4 = decompose(regA4)
check("kA4 = three PIMs", sorted(s.module.dim for s in partsA4) == [4, 4, 4])
check("kA4 summands projective", all(is_projective(s.module) for s in partsA4))

# simple check on a non-p-group simple: the 2-dim simple over GF(2) for C3
C3 = build_group("c3")
regC3 = Module.regular(C3, k2)
simpsC3 = simple_modules(C3, k2)
check("C3/GF(2): simples dims [1,2]", sorted(s.dim for s in simpsC3) == [1, 2])
check("2-dim C3 simple is simple", is_simple([s for s in simpsC3 if s.dim == 2][0]))

# GF(4)-path PHom: A4 stable end of k is 1-dimensional
reps, h, p = stable_hom_basis(kA4, kA4)
check("stable End(k/A4) dim 1", len(reps) == 1)

# top of M3 is k
T, _ = top(M3)
check("top(M3) = k", T.dim == 1)

print(f"\nall {ok} modrep smoke checks passed")
