"""Structural analysis: simple modules, radicals, socles, projectivity.

Submodules are always communicated as matrices whose rows form a basis of the
invariant subspace inside the ambient module.
"""

import numpy as np

from ..determinism import rng_for
from ..errors import DecompositionFailed, FieldTooSmall
from ..ff import poly as fpoly
from ..ff.matrix import Matrix
from .homs import hom_space
from .module import Module

_SIMPLES_CACHE = {}


def _spin_with(mats, dim, field, seed_rows):
    """Row basis of the smallest subspace containing seed_rows and invariant
    under every matrix in mats (a plain matrix spin, no module needed)."""
    basis = seed_rows.row_space_basis()
    if not mats:
        return basis
    while True:
        stacked = basis
        for a in mats:
            stacked = stacked.vstack((a @ basis.transpose()).transpose())
        nb = stacked.row_space_basis()
        if nb.nrows == basis.nrows:
            return nb
        basis = nb


def find_proper_submodule(M, seed=0, tries=60):
    """Row basis of a proper nonzero submodule, or None when M is simple.

    A None return is a certificate: it is only produced through the standard
    one-kernel-vector irreducibility test (spin of a kernel vector of an
    irreducible charpoly factor with matching nullity is full, and the spin of
    a transpose-kernel vector under the transposed action is full as well).
    """
    f = M.field
    dim = M.dim
    if dim <= 1:
        return None
    gens = [M.mats[g] for g in M.group.gens]
    if not gens:
        e0 = np.zeros((1, dim), dtype=np.int32)
        e0[0, 0] = 1
        return Matrix(f, e0)
    gens_t = [a.transpose() for a in gens]
    rng = rng_for("meataxe", M.group.label, f.p, f.d, dim, seed=seed)
    pool = list(gens)
    for attempt in range(tries):
        if attempt < len(pool):
            z = pool[attempt]
        else:
            z = Matrix.zeros(f, dim, dim)
            for _ in range(rng.randrange(1, 4)):
                c = f.random_nonzero(rng)
                z = z + pool[rng.randrange(len(pool))].scale(c)
            if rng.random() < 0.35 and len(pool) < 40:
                pool.append(pool[rng.randrange(len(pool))]
                            @ pool[rng.randrange(len(pool))])
        cp = z.charpoly()
        _unit, facs = fpoly.factor(f, cp, seed=seed)
        for fac, _mult in sorted(facs, key=lambda t: fpoly.deg(t[0])):
            fz = z.apply_poly(fac)
            K = fz.right_kernel()
            if K.nrows == 0:
                continue
            v = Matrix(f, K.a[:1, :])
            U = M.spin(v)
            if U.nrows < dim:
                return U
            if K.nrows == fpoly.deg(fac):
                KT = fz.transpose().right_kernel()
                w = Matrix(f, KT.a[:1, :])
                W = _spin_with(gens_t, dim, f, w)
                if W.nrows == dim:
                    return None  # certified simple
                return W.right_kernel()  # its perp is a proper submodule
    raise DecompositionFailed(
        f"could not chop {M!r} after {tries} attempts")


def is_simple(M, seed=0):
    return M.dim > 0 and find_proper_submodule(M, seed=seed) is None


def composition_factors(M, seed=0):
    """Multiset (list) of simple modules occurring in a composition series."""
    if M.dim == 0:
        return []
    U = find_proper_submodule(M, seed=seed)
    if U is None:
        return [M]
    sub, B = M.submodule(U)
    quo, _pr = M.quotient(B)
    return composition_factors(sub, seed=seed) + composition_factors(quo, seed=seed)


def find_isomorphism(M, N, seed=0, draws=64):
    """An invertible element of Hom(M, N), or None."""
    if M.dim != N.dim:
        return None
    if M.dim == 0:
        return Matrix.zeros(M.field, 0, 0)
    homs = hom_space(M, N)
    if not homs:
        return None
    for phi in homs:
        if phi.is_invertible():
            return phi
    rng = rng_for("iso-draws", M.dim, len(homs), seed=seed)
    f = M.field
    qn = f.q ** len(homs)
    if qn <= 4096:
        # exhaustive: enumerate all coefficient tuples
        coeffs = [0] * len(homs)
        for code in range(1, qn):
            x = code
            for i in range(len(homs)):
                coeffs[i] = x % f.q
                x //= f.q
            phi = Matrix.zeros(f, N.dim, M.dim)
            for c, h in zip(coeffs, homs):
                if c:
                    phi = phi + h.scale(c)
            if phi.is_invertible():
                return phi
        return None
    for _ in range(draws):
        phi = Matrix.zeros(f, N.dim, M.dim)
        for h in homs:
            phi = phi + h.scale(rng.randrange(f.q))
        if phi.is_invertible():
            return phi
    # deterministic fallback: greedy rank ascent over basis combinations
    best = homs[0]
    for h in homs[1:]:
        for c in range(1, f.q):
            cand = best + h.scale(c)
            if cand.rank() > best.rank():
                best = cand
                break
    return best if best.is_invertible() else None


def modules_isomorphic_plain(M, N, seed=0, draws=64):
    """Isomorphism test via invertible elements of Hom(M, N)."""
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    return find_isomorphism(M, N, seed=seed, draws=draws) is not None


def simple_modules(group, field, seed=0):
    """All simple kG-modules up to isomorphism (cached per group & field)."""
    key = (id(group), field.p, field.d)
    if key in _SIMPLES_CACHE:
        return _SIMPLES_CACHE[key]
    if group.is_p_group(field.p):
        out = [Module.trivial(group, field)]
        _SIMPLES_CACHE[key] = out
        return out
    reg = Module.regular(group, field)
    factors = composition_factors(reg, seed=seed)
    reps = []
    for S in factors:
        matched = False
        for T in reps:
            if S.dim == T.dim and len(hom_space(S, T)) > 0:
                matched = True
                break
        if not matched:
            reps.append(S)
    reps.sort(key=lambda s: s.dim)
    named = []
    for i, S in enumerate(reps):
        named.append(S.rename("k" if S.dim == 1 and _is_trivial(S) else f"S{i}"))
    _SIMPLES_CACHE[key] = named
    return named


def _is_trivial(S):
    if S.dim != 1:
        return False
    return all(m.a[0, 0] == 1 for m in S.mats.values())


def trivial_module(group, field):
    return Module.trivial(group, field)


def require_split(group, field, seed=0):
    """Check End(S) = k for every simple S; raise FieldTooSmall otherwise."""
    degs = []
    for S in simple_modules(group, field, seed=seed):
        e = len(hom_space(S, S))
        if e > 1:
            degs.append(e)
    if degs:
        need = 1
        for e in degs:
            need = need * e // _gcd(need, e)
        raise FieldTooSmall(
            f"field {field!r} is not a splitting field for {group.label}; "
            f"an extension of degree {need} suffices")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def radical(M, seed=0):
    """Row basis of rad(M) = intersection of the maximal submodules."""
    f = M.field
    if M.dim == 0:
        return Matrix.zeros(f, 0, 0)
    if M.group.is_p_group(f.p):
        # radical = span of (g - 1)M over all group elements
        blocks = []
        for g in range(1, M.group.order):
            A = M.action(g) - Matrix.identity(f, M.dim)
            blocks.append(A.transpose())
        stacked = blocks[0]
        for b in blocks[1:]:
            stacked = stacked.vstack(b)
        return stacked.row_space_basis()
    rows = None
    for S in simple_modules(M.group, f, seed=seed):
        for phi in hom_space(M, S):
            rows = phi if rows is None else rows.vstack(phi)
    if rows is None:
        return Matrix.zeros(f, 0, M.dim)
    return rows.right_kernel()


def socle(M, seed=0):
    """Row basis of soc(M), the largest semisimple submodule."""
    D = M.dual()
    R = radical(D, seed=seed)
    if R.nrows == 0:
        a = np.eye(M.dim, dtype=np.int32)
        return Matrix(M.field, a)
    return R.right_kernel()


def top(M, seed=0):
    """(Module, projection) for M / rad(M)."""
    R = radical(M, seed=seed)
    if R.nrows == 0:
        return M, Matrix.identity(M.field, M.dim)
    return M.quotient(R)


def radical_series(M, seed=0):
    """[M, rad M, rad^2 M, ...] as row-basis matrices (ending at 0)."""
    f = M.field
    out = [Matrix(f, np.eye(M.dim, dtype=np.int32))]
    cur = M
    curB = out[0]
    while cur.dim > 0:
        R = radical(cur, seed=seed)
        if R.nrows == 0:
            out.append(Matrix.zeros(f, 0, M.dim))
            break
        # rows of R are in cur's coordinates; map back to M's coordinates
        amb = R @ curB
        out.append(amb.row_space_basis())
        cur, curB_local = M.submodule(amb)
        curB = curB_local
    if np.any(out[-1].a) or out[-1].nrows:
        out.append(Matrix.zeros(f, 0, M.dim))
    return out


def socle_series(M, seed=0):
    """[0, soc M, soc^2 M, ...] as row-basis matrices in M's coordinates."""
    f = M.field
    out = [Matrix.zeros(f, 0, M.dim)]
    while out[-1].nrows < M.dim:
        prev = out[-1]
        if prev.nrows == 0:
            S = socle(M, seed=seed)
            out.append(S)
            continue
        quo, proj = M.quotient(prev)
        Sq = socle(quo, seed=seed)
        if Sq.nrows == 0:
            break
        lifted = Sq @ proj_pseudo_lift(proj, M, quo)
        amb = prev.vstack(lifted).row_space_basis()
        out.append(amb)
    return out


def proj_pseudo_lift(proj, M, quo):
    """Right inverse of a quotient projection (rows map quo coords into M)."""
    sol = proj.solve_right(Matrix.identity(M.field, quo.dim))
    if sol is None:
        raise DecompositionFailed("projection is not surjective")
    return sol.transpose()


def loewy_length(M, seed=0):
    series = radical_series(M, seed=seed)
    return len(series) - 1


def is_projective(M):
    """Projectivity over kG via freeness of the restriction to a Sylow
    p-subgroup, detected by the rank of the subgroup norm element."""
    f = M.field
    if M.dim == 0:
        return True
    P = M.group.sylow(f.p)
    if len(P) == 1:
        return True
    if M.dim % len(P):
        return False
    nu = Matrix.zeros(f, M.dim, M.dim)
    for h in P:
        nu = nu + M.action(h)
    return nu.rank() == M.dim // len(P)


def projective_rank(M):
    """Number of free kP-summands of the restriction to a Sylow p-subgroup
    (equals the k-dimension of M divided by |P| exactly when M is projective)."""
    f = M.field
    P = M.group.sylow(f.p)
    if len(P) == 1:
        return M.dim
    nu = Matrix.zeros(f, M.dim, M.dim)
    for h in P:
        nu = nu + M.action(h)
    return nu.rank()
