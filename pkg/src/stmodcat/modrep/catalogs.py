"""Named module catalogs per group family.

Families follow the catalog operation contract: "simples", "indecomposables"
(complete lists, finite representation type only -- otherwise NotFiniteType
is raised carrying a bounded catalog), and "strings" (dihedral 2-groups, up
to a dimension bound).
"""

from ast import literal_eval

import numpy as np

from ..errors import Mismatch, NotFiniteType, SylowNotNormal
from ..ff import poly as fpoly
from ..ff.matrix import Matrix
from .covers import projective_cover, syzygy_power
from .decompose import decompose
from .homs import hom_space
from .induction import induce_module
from .module import Module
from .structure import (modules_isomorphic_plain, radical_series,
                        simple_modules)


class Catalog:
    __slots__ = ("modules", "family", "complete", "note")

    def __init__(self, modules, family, complete, note=""):
        self.modules = modules
        self.family = family
        self.complete = complete
        self.note = note

    def __iter__(self):
        return iter(self.modules)

    def __len__(self):
        return len(self.modules)

    def by_name(self, name):
        for m in self.modules:
            if m.name == name:
                return m
        raise Mismatch(f"no catalog module named {name!r}")

    def __repr__(self):
        flag = "complete" if self.complete else "bounded"
        return (f"Catalog({self.family}, {flag}, "
                f"{[m.name for m in self.modules]})")


# -- basic named constructions

def jordan_module(group, field, n, name=None):
    """M_n: the cyclic-group module where the generator acts as a single
    unipotent Jordan block of size n."""
    if len(group.gens) != 1:
        raise Mismatch("jordan_module needs a one-generator group")
    a = np.eye(n, dtype=np.int32)
    for i in range(n - 1):
        a[i + 1, i] = 1
    gname = next(iter(group.gens))
    return Module(group, field, {gname: Matrix(field, a)},
                  name=name or f"M{n}", check=False)


def character_module(group, field, scalars, name=None):
    """One-dimensional module from generator scalars (relations checked)."""
    return Module.one_dimensional(group, field, scalars, name=name)


def cyclic_indecomposables(group, field):
    """M_1 ... M_{p^r} over a cyclic p-group (complete)."""
    p = field.p
    if not group.is_p_group(p) or len(group.gens) != 1:
        raise Mismatch("expected a one-generator p-group")
    mods = [jordan_module(group, field, n) for n in range(1, group.order + 1)]
    return Catalog(mods, "indecomposables", True,
                   "uniserial tower of Jordan blocks")


# -- Klein four group

def klein_band(group, field, param, n, name=None):
    """Even-dimensional indecomposable for the Klein four group.

    param is either the string "inf" or a monic irreducible polynomial
    (coefficient tuple).  The two generators act as I + Xhat, I + Yhat with
    (Xhat, Yhat) the Kronecker pair (I, J_n(companion(f))) -- or its swap for
    the point at infinity.
    """
    if field.p != 2:
        raise Mismatch("Klein bands implemented in characteristic 2")
    if param == "inf":
        e = 1
        J = _jordan_companion(field, (0, 1), n)  # companion of t = [0]
        Xhat, Yhat = J, np.eye(n, dtype=np.int32)
    else:
        e = fpoly.deg(param)
        J = _jordan_companion(field, param, n)
        Xhat, Yhat = np.eye(n * e, dtype=np.int32), J
    m = Xhat.shape[0]
    g1 = np.eye(2 * m, dtype=np.int32)
    g1[m:, :m] = Xhat
    g2 = np.eye(2 * m, dtype=np.int32)
    g2[m:, :m] = Yhat
    gnames = list(group.gens)
    if len(gnames) != 2:
        raise Mismatch("Klein four group needs two generators")
    mats = {gnames[0]: Matrix(field, g1), gnames[1]: Matrix(field, g2)}
    if name is None:
        if param == "inf":
            pname = "inf"
        elif fpoly.deg(param) == 1:
            pname = str(field.neg(param[0]))  # t - lambda
        else:
            pname = "f" + "".join(str(c) for c in param)
        name = f"E({pname},{n})"
    return Module(group, field, mats, name=name, check=False)


def _jordan_companion(field, f, n):
    """n x n block Jordan matrix with companion(f) on the diagonal blocks."""
    e = fpoly.deg(f)
    C = np.zeros((e, e), dtype=np.int32)
    for i in range(e - 1):
        C[i + 1, i] = 1
    for i in range(e):
        C[i, e - 1] = field.neg(f[i])
    out = np.zeros((n * e, n * e), dtype=np.int32)
    for b in range(n):
        out[b * e:(b + 1) * e, b * e:(b + 1) * e] = C
        if b + 1 < n:
            out[b * e:(b + 1) * e, (b + 1) * e:(b + 2) * e] = np.eye(
                e, dtype=np.int32)
    return out


def _monic_irreducibles(field, degree):
    """All monic irreducible polynomials of the given degree (sorted)."""
    out = []
    for code in range(field.q ** degree):
        coeffs = []
        x = code
        for _ in range(degree):
            coeffs.append(x % field.q)
            x //= field.q
        poly = tuple(coeffs) + (1,)
        if fpoly.is_irreducible(field, poly):
            out.append(poly)
    return out


def klein_four_indecomposables(group, field, dim_bound):
    """All indecomposable modules of the Klein four group up to dim_bound:
    the trivial module, the free module, zigzags (syzygies of k), and the
    two-parameter band family."""
    mods = [Module.trivial(group, field)]
    if 4 <= dim_bound:
        mods.append(Module.regular(group, field, name="kV"))
    m = 1
    while 2 * m + 1 <= dim_bound:
        for sign in (1, -1):
            M = syzygy_power(Module.trivial(group, field), sign * m)
            mods.append(M.rename(f"O^{sign * m}(k)"))
        m += 1
    half = dim_bound // 2
    for e in range(1, half + 1):
        for f in _monic_irreducibles(field, e):
            n = 1
            while 2 * n * e <= dim_bound:
                mods.append(klein_band(group, field, f, n))
                n += 1
    n = 1
    while 2 * n <= dim_bound:
        mods.append(klein_band(group, field, "inf", n))
        n += 1
    return Catalog(mods, "indecomposables", False,
                   f"complete up to dimension {dim_bound}; "
                   "the family itself is infinite")


# -- A4

def a4_characters(group, field):
    """k, k_zeta, k_zetabar over A4 (needs a cube root of unity)."""
    z = field.primitive_root_of_unity(3)
    z2 = field.mul(z, z)
    out = [Module.trivial(group, field)]
    for scal, nm in ((z, "k_z"), (z2, "k_z2")):
        out.append(character_module(
            group, field, {"t": 1, "c": scal}, name=nm))
    return out


def a4_indecomposables(group, field, dim_bound=8, seed=0):
    """Indecomposable kA4-modules up to dim_bound, via induction from the
    Sylow 2-subgroup: every indecomposable divides the induction of an
    indecomposable summand of its restriction."""
    V, emb = _sylow_as_subgroup(group, 2)
    vcat = klein_four_indecomposables(V, field, dim_bound)
    found = []
    for N in vcat:
        ind, _reps = induce_module(N, group, V, emb)
        for s in decompose(ind, seed=seed):
            M = s.module
            if M.dim > dim_bound:
                continue
            if any(M.dim == T.dim and modules_isomorphic_plain(M, T, seed=seed)
                   for T in found):
                continue
            found.append(M)
    named = _name_against_references(found, _a4_references(group, field,
                                                           dim_bound), seed)
    named.sort(key=lambda m: (m.dim, m.name))
    return Catalog(named, "indecomposables", False,
                   f"complete up to dimension {dim_bound}; "
                   "the family itself is infinite")


def _a4_references(group, field, dim_bound):
    refs = []
    for ch in a4_characters(group, field):
        refs.append((ch, ch.name))
        m = 1
        while 2 * m + 1 <= dim_bound:
            for sign in (1, -1):
                sy = syzygy_power(ch, sign * m)
                refs.append((sy, f"O^{sign * m}({ch.name})"))
            m += 1
    return refs


def _name_against_references(found, refs, seed):
    out = []
    for M in found:
        label = None
        for R, nm in refs:
            if M.dim == R.dim and modules_isomorphic_plain(M, R, seed=seed):
                label = nm
                break
        if label is None:
            label = f"A4[{M.dim}]#{sum(1 for x in out if x.dim == M.dim)}"
        out.append(M.rename(label))
    return out


def _sylow_as_subgroup(group, p):
    syl = group.sylow(p)
    return group.as_subgroup(syl)


# -- C_{ql} and D_{2ql}

def cql_simple(group, field, q, l, i, name=None):
    """k_i: x^q acts as zeta^(l-i); determined by x -> zeta^((l-i)/q mod l)."""
    z = field.primitive_root_of_unity(l)
    qinv = pow(q % l, -1, l)
    m = ((l - i) * qinv) % l
    scal = field.pow(z, m)
    gname = next(iter(group.gens))
    return character_module(group, field, {gname: scal},
                            name=name or f"k{i}")


def cql_indecomposables(group, field, q, l, seed=0):
    """e_i(M_n induced): the complete list for C_{ql} (q a p-power, l odd
    prime to p); ql modules, q per block."""
    from ..blocks import cql_idempotent_vector
    sub_elems = [(l * j) % (q * l) for j in range(q)]
    Cq, emb = group.as_subgroup(sub_elems)
    mods = []
    for i in range(l):
        e_i = cql_idempotent_vector(group, field, q, l, i)
        for n in range(1, q + 1):
            Mn = jordan_module(Cq, field, n)
            ind, _reps = induce_module(Mn, group, Cq, emb)
            E = ind.algebra_action(e_i)
            basis = E.transpose().row_space_basis()
            sub, _B = ind.submodule(basis, name=f"e{i}(M{n}ind)")
            if sub.dim != n:
                raise Mismatch("block cut has unexpected dimension")
            mods.append(sub)
    return Catalog(mods, "indecomposables", True,
                   "q modules per block, ql in total")


# -- uniserial catalogs (cyclic normal Sylow subgroup)

def has_cyclic_normal_sylow(group, p):
    syl = group.sylow(p)
    if not group.is_normal(syl):
        return False
    orders = {group.element_order(g) for g in syl}
    return max(orders) == len(syl)


def uniserial_indecomposables(group, field, namer=None, seed=0):
    """All indecomposables P(S)/rad^i for groups with a cyclic normal Sylow
    p-subgroup: every indecomposable is uniserial, determined by (radical
    length, top)."""
    p = field.p
    if not has_cyclic_normal_sylow(group, p):
        raise SylowNotNormal(
            f"{group.label} has no cyclic normal Sylow {p}-subgroup")
    simples = simple_modules(group, field, seed=seed)
    names = {}
    for idx, S in enumerate(simples):
        names[idx] = namer(S) if namer else S.name
    mods = []
    for idx, S in enumerate(simples):
        P, _pi, _pieces = projective_cover(S, seed=seed)
        series = radical_series(P, seed=seed)
        depth = len(series) - 1  # radical length of P
        for i in range(1, depth + 1):
            if i == depth:
                quo = P
                quo = quo.rename(f"M({i},{names[idx]})")
            else:
                quo, _pr = P.quotient(series[i])
                quo = quo.rename(f"M({i},{names[idx]})")
            mods.append(quo)
    return Catalog(mods, "indecomposables", True,
                   "uniserial modules (length, top) for cyclic normal Sylow")


# -- SL(2,p) and its Borel L = N(P)

def sl2_natural(group, field):
    """The defining 2-dimensional module of SL(2,p)."""
    mats = {}
    for gname, gi in group.gens.items():
        m = literal_eval(group.element_names[gi])
        mats[gname] = Matrix(field, np.array(m, dtype=np.int32) % field.p)
    return Module(group, field, mats, name="V2", check=True)


def sym_power_module(nat, d, name=None):
    """Sym^d of a 2-dimensional module: action on x^(d-k) y^k monomials."""
    f = nat.field
    group = nat.group
    mats = {}
    for gname in group.gens:
        g = nat.mats[gname]
        a, b = int(g.a[0, 0]), int(g.a[0, 1])
        c, dd = int(g.a[1, 0]), int(g.a[1, 1])
        big = np.zeros((d + 1, d + 1), dtype=np.int32)
        for k in range(d + 1):
            # g(x^{d-k} y^k) = (a x + c y)^{d-k} (b x + d y)^k
            poly1 = _binom_expand(f, a, c, d - k)
            poly2 = _binom_expand(f, b, dd, k)
            conv = np.zeros(d + 1, dtype=np.int32)
            for i1, c1 in enumerate(poly1):
                if not c1:
                    continue
                for i2, c2 in enumerate(poly2):
                    if not c2:
                        continue
                    j = i1 + i2  # power of y
                    conv[j] = f.add(conv[j], f.mul(c1, c2))
            big[:, k] = conv
        mats[gname] = Matrix(f, big)
    return Module(group, f, mats, name=name or f"Sym^{d}", check=False)


def _binom_expand(field, u, v, n):
    """(u x + v y)^n as coefficients of y^k, k = 0..n."""
    out = [0] * (n + 1)
    from math import comb
    for k in range(n + 1):
        coef = comb(n, k) % field.p
        term = field.mul(field.mul(
            field.pow(u, n - k) if n - k else 1,
            field.pow(v, k) if k else 1), coef)
        out[k] = term
    return out


def sl2_simples(group, field, p):
    """V_1 ... V_p: the simple kSL(2,p)-modules as symmetric powers."""
    nat = sl2_natural(group, field)
    out = []
    for d in range(p):
        out.append(sym_power_module(nat, d, name=f"V{d + 1}"))
    return out


def sl2_L_subgroup(group, p):
    """(L, embedding, a_value): the normalizer of the lower unitriangular
    Sylow p-subgroup; a_value[i] is the diagonal entry a of L's element i,
    every element of L being lower triangular [[a, 0], [c, 1/a]]."""
    name_to_index = {nm: i for i, nm in enumerate(group.element_names)}
    P = [name_to_index[f"[[1,0],[{c},1]]"] for c in range(p)]
    Lelems = group.normalizer(P)
    L, emb = group.as_subgroup(Lelems)
    a_value = []
    for li in range(L.order):
        m = literal_eval(group.element_names[emb[li]])
        if m[0][1] % p != 0:
            raise Mismatch("normalizer element is not lower triangular")
        a_value.append(m[0][0] % p)
    return L, emb, a_value


def sl2_L_character(L, field, a_value, i, name=None):
    """S_i over L: [[a,0],[c,1/a]] acts as a^i."""
    scalars = {gname: field.pow(a_value[gi], i)
               for gname, gi in L.gens.items()}
    return character_module(L, field, scalars, name=name or f"S{i}")


def sl2_L_catalog(L, field, a_value, p, seed=0):
    """The M_{i,j} catalog over L, named by (radical length, top index)."""
    chars = [sl2_L_character(L, field, a_value, i) for i in range(p - 1)]

    def namer(S):
        for i, C in enumerate(chars):
            if S.dim == 1 and len(hom_space(S, C)) > 0:
                return f"S{i}"
        raise Mismatch("simple does not match any character")

    cat = uniserial_indecomposables(L, field, namer=namer, seed=seed)
    return cat, chars


# -- dispatcher

def catalog(group, field, family, dim_bound=None, seed=0):
    """The catalog operation: simples / indecomposables / strings."""
    if family == "simples":
        mods = simple_modules(group, field, seed=seed)
        return Catalog(list(mods), "simples", True)
    if family == "strings":
        from ..strings import string_catalog
        bound = dim_bound or 4 * _dihedral_q(group)
        return string_catalog(group, field, bound)
    if family != "indecomposables":
        raise Mismatch(f"unknown catalog family {family!r}")
    p = field.p
    label = group.label.lower()
    if group.is_p_group(p) and len(group.gens) == 1:
        return cyclic_indecomposables(group, field)
    if label == "v4" or (group.order == 4 and group.is_abelian()
                         and len(group.gens) == 2):
        bound = dim_bound or 8
        cat = klein_four_indecomposables(group, field, bound)
        err = NotFiniteType(
            "the Klein four group has infinitely many indecomposables; "
            f"returning the catalog up to dimension {bound}")
        err.catalog = cat
        raise err
    if label == "a4":
        bound = dim_bound or 8
        cat = a4_indecomposables(group, field, bound, seed=seed)
        err = NotFiniteType(
            "A4 in characteristic 2 has infinitely many indecomposables; "
            f"returning the catalog up to dimension {bound}")
        err.catalog = cat
        raise err
    if has_cyclic_normal_sylow(group, p):
        return uniserial_indecomposables(group, field, seed=seed)
    err = NotFiniteType(
        f"no complete indecomposable catalog for {group.label} at p={p}")
    err.catalog = None
    raise err


def _dihedral_q(group):
    return max(2, group.order // 4)
