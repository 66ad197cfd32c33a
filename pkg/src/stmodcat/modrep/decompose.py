"""Direct-sum decomposition into indecomposables (Fitting on endomorphisms).

A split is found through an endomorphism whose minimal polynomial has at
least two coprime primary parts; the CRT idempotents of that polynomial are
then orthogonal projections onto complementary summands.  Indecomposability
is certified by exhibiting End(M) as (residue field) + (nilpotent ideal):
a generator of the residue field GF(q^e) is located inside End(M), every
basis element is matched with its residue-field part, and the leftover
nilpotent parts must form a nilpotent two-sided ideal of codimension e.
"""

from math import lcm

import numpy as np

from ..determinism import rng_for
from ..errors import DecompositionFailed
from ..ff import poly as fpoly
from ..ff.matrix import Matrix
from .covers import _crt_idempotent_polys
from .homs import end_algebra, hom_space
from .module import Module
from .structure import is_projective, modules_isomorphic_plain


class Summand:
    __slots__ = ("module", "inclusion", "projection")

    def __init__(self, module, inclusion, projection):
        self.module = module          # with its own coordinates
        self.inclusion = inclusion    # ambient_dim x part_dim
        self.projection = projection  # part_dim x ambient_dim

    def __repr__(self):
        return f"Summand({self.module.name!r}, dim {self.module.dim})"


def _identity_summand(M):
    I = Matrix.identity(M.field, M.dim)
    return Summand(M, I, I)


def _compose(outer, inner):
    """Embed inner (a summand of outer.module) as a summand of the ambient."""
    return Summand(inner.module,
                   outer.inclusion @ inner.inclusion,
                   inner.projection @ outer.projection)


def _split_once(M, seed):
    """One Fitting split.  Returns a list of Summands of M (>= 2 parts), or
    None when End(M) is certified local (M indecomposable)."""
    f = M.field
    ends = end_algebra(M)
    if len(ends) == 1:
        return None
    rng = rng_for("fitting", M.group.label, f.p, f.d, M.dim, len(ends),
                  seed=seed)
    candidates = list(ends)
    tries = 24 + 4 * len(ends)
    for attempt in range(tries):
        if attempt < len(candidates):
            z = candidates[attempt]
        else:
            z = Matrix.zeros(f, M.dim, M.dim)
            for e in ends:
                z = z + e.scale(rng.randrange(f.q))
        mp = z.minpoly()
        _unit, facs = fpoly.factor(f, mp, seed=seed)
        if len(facs) < 2:
            continue
        return _crt_split(M, z, facs, seed)
    late = _certify_local(f, ends, rng, seed)
    if late is True:
        return None
    if late is not False:
        # the residue-field generator search stumbled on a splitting element
        z, facs = late
        return _crt_split(M, z, facs, seed)
    raise DecompositionFailed(
        f"no split found for {M.name} and End could not be certified local")


def _crt_split(M, z, facs, seed):
    """Split M along the primary components of the endomorphism z."""
    f = M.field
    polys = _crt_idempotent_polys(f, facs)
    parts = []
    for pi in polys:
        E = z.apply_poly(pi)
        basis = E.transpose().row_space_basis()
        sub, B = M.submodule(basis)
        incl = B.transpose()
        proj = incl.solve_right(E)
        if proj is None:
            raise DecompositionFailed("projection failed to restrict")
        parts.append(Summand(sub, incl, proj))
    if sum(p.module.dim for p in parts) != M.dim:
        raise DecompositionFailed("Fitting parts do not fill the module")
    return parts


def _mat_pow(X, n):
    out = Matrix.identity(X.field, X.nrows)
    base = X
    while n:
        if n & 1:
            out = out @ base
        base = base @ base
        n >>= 1
    return out


def _primary_minpoly(f, z, seed):
    """(irreducible part, multiplicity) if z's minimal polynomial is primary,
    else None (z then splits the algebra)."""
    _u, facs = fpoly.factor(f, z.minpoly(), seed=seed)
    if len(facs) != 1:
        return None
    return facs[0]


def _certify_local(f, ends, rng, seed):
    """Certify that span(ends) is a local algebra.

    Finds a generator s of the residue field K = GF(q^e) inside the span,
    writes every basis element as (K-part) + (nilpotent part), and checks
    the nilpotent parts form a nilpotent two-sided ideal of codimension e.
    Returns True (certified), False (failed), or a pair (z, factors) if the
    generator search found a splitting element instead."""
    n = ends[0].nrows
    r = len(ends)
    facts = []
    for z in ends:
        pf = _primary_minpoly(f, z, seed)
        if pf is None:
            _u, facs = fpoly.factor(f, z.minpoly(), seed=seed)
            return (z, facs)
        facts.append(pf)
    e = 1
    for fac, _m in facts:
        e = lcm(e, fpoly.deg(fac))
    if f.q ** e > 4096:
        return False
    # find w whose primary minimal polynomial has irreducible part of
    # degree exactly e (a residue-field generator)
    w, w_fac, w_mult = None, None, None
    pool = list(ends)
    for i in range(r):
        for j in range(i + 1, r):
            pool.append(ends[i] + ends[j])
    for _ in range(24):
        z = Matrix.zeros(f, n, n)
        for b in ends:
            z = z + b.scale(rng.randrange(f.q))
        pool.append(z)
    for z in pool:
        pf = _primary_minpoly(f, z, seed)
        if pf is None:
            _u, facs = fpoly.factor(f, z.minpoly(), seed=seed)
            return (z, facs)
        fac, mult = pf
        if fpoly.deg(fac) == e:
            w, w_fac, w_mult = z, fac, mult
            break
    if w is None:
        return False
    # semisimple (Teichmueller) part of w: raise to a power (q^e)^K that is
    # large enough to kill the nilpotent part
    qe = f.q ** e
    power = qe
    while power < w_mult:
        power *= qe
    s = _mat_pow(w, power)
    spows = [Matrix.identity(f, n)]
    for _a in range(1, e):
        spows.append(spows[-1] @ s)
    # enumerate K = k[s] and find the K-part of every basis element
    kelems = [Matrix.zeros(f, n, n)]
    for a in range(e):
        grown = []
        for prev in kelems:
            for c in range(1, f.q):
                grown.append(prev + spows[a].scale(c))
        kelems.extend(grown)
    big = 1
    while big < n:
        big *= 2
    nil_rows = []
    for b in ends:
        hit = None
        for xi in kelems:
            cand = b - xi
            if not np.any(_mat_pow(cand, big).a):
                hit = cand
                break
        if hit is None:
            return False
        if np.any(hit.a):
            nil_rows.append(hit.a.reshape(1, -1))
    srows = Matrix(f, np.concatenate(
        [sp.a.reshape(1, -1) for sp in spows], axis=0))
    if not nil_rows:
        return srows.rank() == r  # End is the field k[s] itself
    N = Matrix(f, np.concatenate(nil_rows, axis=0)).row_space_basis()
    if N.nrows != r - e:
        return False
    if srows.vstack(N).rank() != r:
        return False
    nbasis = [Matrix(f, N.a[i].reshape(n, n)) for i in range(N.nrows)]
    # two-sided ideal: products with every algebra basis element stay in N
    for a in nbasis:
        for b in ends:
            for prod in (a @ b, b @ a):
                v = Matrix(f, prod.a.reshape(1, -1))
                if np.any(v.a) and not N.in_row_space(v):
                    return False
    # nilpotency of the ideal: iterate products until they vanish
    power_list = nbasis
    for _ in range(n + 1):
        if not power_list:
            return True
        nxt_rows = []
        for a in power_list:
            for b in nbasis:
                prod = (a @ b).a.reshape(1, -1)
                if np.any(prod):
                    nxt_rows.append(prod)
        if not nxt_rows:
            return True
        P = Matrix(f, np.concatenate(nxt_rows, axis=0)).row_space_basis()
        power_list = [Matrix(f, P.a[i].reshape(n, n))
                      for i in range(P.nrows)]
    return False


def _jordan_summands(M, gen_name):
    """Exact decomposition for a module over a cyclic p-group: Jordan chains
    of the unipotent generator action."""
    f = M.field
    N = M.mats[gen_name] - Matrix.identity(f, M.dim)
    dim = M.dim
    # kernels of N^j
    kers = [Matrix.zeros(f, 0, dim)]
    P = Matrix.identity(f, dim)
    while kers[-1].nrows < dim:
        P = N @ P
        kers.append(P.right_kernel())
    s = len(kers) - 1
    chains = []
    down = []  # images (under N^{d-j}) of chain tops from depths d > j
    for j in range(s, 0, -1):
        base = kers[j - 1]
        for x in down:
            base = base.vstack(x)
        base = base.row_space_basis()
        new_tops = []
        Kj = kers[j]
        for i in range(Kj.nrows):
            v = Matrix(f, Kj.a[i:i + 1])
            ext = base.vstack(v).row_space_basis()
            if ext.nrows == base.nrows + 1:
                new_tops.append(v)
                base = ext
                chains.append((j, v))
        down = [(N @ x.transpose()).transpose() for x in down + new_tops]
    out = []
    for depth, v in sorted(chains, key=lambda c: -c[0]):
        rows = [v]
        for _ in range(depth - 1):
            rows.append((N @ rows[-1].transpose()).transpose())
        B = rows[0]
        for r in rows[1:]:
            B = B.vstack(r)
        sub, Bb = M.submodule(B)
        incl = Bb.transpose()
        out.append((depth, sub, incl))
    if sum(d for d, _s, _i in out) != dim:
        raise DecompositionFailed("Jordan chains do not fill the module")
    # projections: solve the full change of basis once
    allB = None
    for _d, _s, incl in out:
        allB = incl if allB is None else allB.hstack(incl)
    allBinv = allB.inverse()
    if allBinv is None:
        raise DecompositionFailed("Jordan chain vectors are not a basis")
    summands = []
    ofs = 0
    for d, sub, incl in out:
        proj = Matrix(f, allBinv.a[ofs:ofs + d, :])
        summands.append(Summand(sub, incl, proj))
        ofs += d
    return summands


def decompose(M, seed=0):
    """List of Summands of M, each indecomposable, covering M."""
    if M.dim == 0:
        return []
    G = M.group
    f = M.field
    if G.is_p_group(f.p) and G.is_abelian() and len(G.gens) == 1:
        gname = next(iter(G.gens))
        return _jordan_summands(M, gname)
    parts = _split_once(M, seed)
    if parts is None:
        return [_identity_summand(M)]
    out = []
    for part in parts:
        for inner in decompose(part.module, seed=seed):
            out.append(_compose(part, inner))
    return out


def is_indecomposable(M, seed=0):
    return M.dim > 0 and len(decompose(M, seed=seed)) == 1


def projective_free_part(M, seed=0):
    """(module, info) where the module is M minus its projective summands.

    info = {"projective_dims": [...], "kept": [...Summand...]}
    """
    if M.dim == 0:
        return M, {"projective_dims": [], "kept": []}
    parts = decompose(M, seed=seed)
    kept = []
    proj_dims = []
    for s in parts:
        if is_projective(s.module):
            proj_dims.append(s.module.dim)
        else:
            kept.append(s)
    if not kept:
        return Module.zero(M.group, M.field), \
            {"projective_dims": proj_dims, "kept": []}
    mods = [s.module for s in kept]
    pf = mods[0] if len(mods) == 1 else mods[0].direct_sum(*mods[1:])
    return pf, {"projective_dims": proj_dims, "kept": kept}


class DecompositionReport:
    """Krull-Schmidt bookkeeping: grouped summands plus a change-of-basis
    witness whose conjugation block-diagonalizes the action."""

    __slots__ = ("module", "parts", "grouped", "witness")

    def __init__(self, module, parts, grouped, witness):
        self.module = module
        self.parts = parts        # list of Summand, in witness block order
        self.grouped = grouped    # list of (Module, multiplicity)
        self.witness = witness    # invertible: stacked projections

    def summands(self):
        return self.grouped

    def __repr__(self):
        inner = " + ".join(
            (f"{c}x" if c > 1 else "") + f"{mod.name}[{mod.dim}]"
            for mod, c in self.grouped)
        return f"DecompositionReport({self.module.name} = {inner})"


def decomposition_report(M, seed=0):
    parts = decompose(M, seed=seed)
    f = M.field
    grouped = []
    for s in parts:
        hit = False
        for i, (mod, cnt) in enumerate(grouped):
            if mod.dim == s.module.dim and modules_isomorphic_plain(
                    mod, s.module, seed=seed):
                grouped[i] = (mod, cnt + 1)
                hit = True
                break
        if not hit:
            grouped.append((s.module, 1))
    if parts:
        witness = parts[0].projection
        for s in parts[1:]:
            witness = witness.vstack(s.projection)
        if not witness.is_invertible():
            raise DecompositionFailed("projection stack is not invertible")
    else:
        witness = Matrix.identity(f, 0)
    if sum(mod.dim * cnt for mod, cnt in grouped) != M.dim:
        raise DecompositionFailed("summand dimensions do not add up")
    return DecompositionReport(M, parts, grouped, witness)


def match_up_to_iso(mods_a, mods_b, iso):
    """Greedy perfect matching of two module lists under the given iso test."""
    if len(mods_a) != len(mods_b):
        return False
    remaining = list(range(len(mods_b)))
    for a in mods_a:
        hit = None
        for idx in remaining:
            if iso(a, mods_b[idx]):
                hit = idx
                break
        if hit is None:
            return False
        remaining.remove(hit)
    return True
