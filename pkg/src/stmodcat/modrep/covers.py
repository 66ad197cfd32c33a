"""Projective indecomposables, covers, syzygies, and injective hulls.

The indecomposable projectives are carved out of the regular module by
splitting the identity into orthogonal idempotents: right multiplications
commute with the left action, so kernels of polynomials in them are left
submodules, and refining idempotents inside e.kG.e drives the decomposition
down to modules with simple top (which certifies primitivity).
"""

import numpy as np

from ..determinism import rng_for
from ..errors import DecompositionFailed, Mismatch
from ..ff import poly as fpoly
from ..ff.matrix import Matrix
from .homs import hom_space
from .module import Module
from .structure import is_simple, radical, simple_modules, top

_PIM_CACHE = {}


class ProjectiveIndecomposable:
    __slots__ = ("module", "idempotent", "basis", "simple_index", "multiplicity")

    def __init__(self, module, idempotent, basis, simple_index, multiplicity):
        self.module = module           # kG.e with its own coordinates
        self.idempotent = idempotent   # row vector: coefficients of e in kG
        self.basis = basis             # rows: basis of kG.e inside kG
        self.simple_index = simple_index
        self.multiplicity = multiplicity

    def __repr__(self):
        return (f"PIM(dim {self.module.dim}, top S{self.simple_index}, "
                f"mult {self.multiplicity})")


def _algebra_mul(group, field, a, b):
    """Product of two group-algebra elements given as coefficient rows."""
    out = np.zeros(group.order, dtype=np.int64)
    idx_a = np.nonzero(a)[0]
    if field.d == 1:
        for g in idx_a:
            out[group.table[g]] += int(a[g]) * b.astype(np.int64)
        return (out % field.p).astype(np.int32)
    res = np.zeros(group.order, dtype=np.int32)
    for g in idx_a:
        term = field.mul_vec(np.int32(a[g]), b)
        scattered = np.zeros(group.order, dtype=np.int32)
        scattered[group.table[g]] = term
        res = field.add_vec(res, scattered)
    return res


def _right_mult_matrix(group, field, v):
    """Matrix of x -> x . v on kG (columns indexed by group elements)."""
    n = group.order
    if field.d == 1:
        a = np.zeros((n, n), dtype=np.int64)
        for g in np.nonzero(v)[0]:
            a[group.table[:, g], np.arange(n)] += int(v[g])
        return Matrix(field, (a % field.p).astype(np.int32))
    a = np.zeros((n, n), dtype=np.int32)
    for g in np.nonzero(v)[0]:
        # x.v column j picks up the coefficient v[g] at row j*g
        contrib = np.zeros((n, n), dtype=np.int32)
        contrib[group.table[:, g], np.arange(n)] = int(v[g])
        a = field.add_vec(a, contrib)
    return Matrix(field, a)


def _crt_idempotent_polys(field, facs):
    """CRT idempotents for k[t]/prod f_i^{m_i}: polys p_i with p_i = delta_ij
    mod f_j^{m_j}."""
    parts = [fpoly.pow_int(field, f, m) for f, m in facs]
    total = fpoly.ONE
    for p in parts:
        total = fpoly.mul(field, total, p)
    out = []
    for p in parts:
        rest = fpoly.divmod_(field, total, p)[0]
        # find u with u*rest = 1 mod p  (gcd(rest, p) = 1)
        g, u, _v = fpoly.xgcd(field, rest, p)
        if fpoly.deg(g) != 0:
            raise DecompositionFailed("factors are not coprime")
        u = fpoly.scale(field, u, field.inv(g[0]))
        out.append(fpoly.mod(field, fpoly.mul(field, u, rest), total))
    return out


def projective_indecomposables(group, field, seed=0):
    """All PIMs of kG, with idempotents, inner bases, and multiplicities."""
    key = (id(group), field.p, field.d)
    if key in _PIM_CACHE:
        return _PIM_CACHE[key]
    reg = Module.regular(group, field)
    simples = simple_modules(group, field, seed=seed)
    n = group.order
    rng = rng_for("pims", group.label, field.p, field.d, seed=seed)

    one = np.zeros(n, dtype=np.int32)
    one[0] = 1
    finished = []
    queue = [one]
    guard = 0
    while queue:
        guard += 1
        if guard > 4 * n + 100:
            raise DecompositionFailed("idempotent refinement did not terminate")
        e = queue.pop()
        Re = _right_mult_matrix(group, field, e)
        W = Re.transpose().row_space_basis()  # basis rows of kG.e
        k = W.nrows
        sub, B = reg.submodule(W)
        # is the top simple already?  then e is primitive
        T, _pr = top(sub, seed=seed)
        if is_simple(T, seed=seed):
            finished.append((e, B, sub))
            continue
        split = _try_split(group, field, e, B, rng, seed)
        if split is None:
            raise DecompositionFailed(
                f"no splitting found for a non-primitive idempotent over "
                f"{group.label} / {field!r}")
        queue.extend(split)

    pims = []
    used = [0] * len(simples)
    for e, B, sub in finished:
        T, _pr = top(sub, seed=seed)
        si = None
        for i, S in enumerate(simples):
            if T.dim == S.dim and len(hom_space(T, S)) > 0:
                si = i
                break
        if si is None:
            raise DecompositionFailed("top of a PIM matches no simple")
        used[si] += 1
        pims.append(ProjectiveIndecomposable(sub, e, B, si, 0))
    # keep one representative per simple; record multiplicities
    reps = {}
    for pim in pims:
        if pim.simple_index not in reps:
            pim.multiplicity = used[pim.simple_index]
            reps[pim.simple_index] = pim
    out = [reps[i] for i in sorted(reps)]
    if sum(p.module.dim * p.multiplicity for p in out) != n:
        raise DecompositionFailed("PIM dimensions do not add up to |G|")
    if len(out) != len(simples):
        raise DecompositionFailed("missing a PIM for some simple")
    _PIM_CACHE[key] = out
    return out


def _try_split(group, field, e, B, rng, seed, tries=48):
    """Split a non-primitive idempotent e into two or more orthogonal ones.

    Draws w in e.kG.e, restricts right multiplication by w to kG.e, and uses
    CRT idempotents of a minimal polynomial with at least two coprime primary
    parts.  Returns a list of idempotent coefficient rows, or None.
    """
    n = group.order
    Bt = B.transpose()
    for attempt in range(tries):
        u = np.zeros(n, dtype=np.int32)
        for _ in range(rng.randrange(1, 4)):
            u[rng.randrange(n)] = field.random_nonzero(rng)
        w = _algebra_mul(group, field, e, _algebra_mul(group, field, u, e))
        if not np.any(w):
            continue
        Rw = _right_mult_matrix(group, field, w)
        img = Rw @ Bt
        z = Bt.solve_right(img)
        if z is None:
            raise DecompositionFailed("right multiplication left kG.e")
        mp = z.minpoly()
        _unit, facs = fpoly.factor(field, mp, seed=seed)
        if len(facs) < 2:
            continue
        polys = _crt_idempotent_polys(field, facs)
        e_row = Matrix(field, e.reshape(1, -1))
        coords = Bt.solve_right(e_row.transpose())
        if coords is None:
            raise DecompositionFailed("e does not lie in kG.e")
        parts = []
        for pi in polys:
            Ei = z.apply_poly(pi)
            ei_coords = Ei @ coords
            ei = (Bt @ ei_coords).transpose().a[0]
            if np.any(ei):
                parts.append(ei.astype(np.int32))
        if len(parts) >= 2:
            return parts
    return None


def projective_cover(M, seed=0):
    """(P, pi, pieces) with pi: P ->> M a minimal projective cover.

    pieces is a list of (pim, count) recording P = + P(S_i)^{c_i}.
    """
    f = M.field
    G = M.group
    if M.dim == 0:
        P = Module.zero(G, f)
        return P, Matrix.zeros(f, 0, 0), []
    pims = projective_indecomposables(G, f, seed=seed)
    simples = simple_modules(G, f, seed=seed)
    rad_rows = radical(M, seed=seed)
    mults = []
    for pim in pims:
        S = simples[pim.simple_index]
        h = hom_space(M, S)
        endS = len(hom_space(S, S))
        if len(h) % endS:
            raise Mismatch("hom dimension not divisible by End(S)")
        mults.append(len(h) // endS)
    blocks = []
    pieces = []
    covered = rad_rows
    for pim, m_i in zip(pims, mults):
        if m_i == 0:
            continue
        S = simples[pim.simple_index]
        e = pim.idempotent
        eM = M.algebra_action(e).transpose().row_space_basis()  # rows span e.M
        taken = 0
        # basis of kG.e as algebra elements
        bvecs = pim.basis.a
        for cand_i in range(eM.nrows):
            if taken == m_i:
                break
            v = Matrix(f, eM.a[cand_i:cand_i + 1, :]).transpose()
            C = _pim_hom_matrix(M, bvecs, v)
            test = covered.vstack(C.transpose()).row_space_basis()
            if test.nrows == covered.nrows + S.dim:
                covered = test
                blocks.append(C)
                taken += 1
            elif test.nrows != covered.nrows:
                # image adds a partial top layer: cannot happen for simple top
                raise DecompositionFailed("cover image added unexpected rank")
        if taken < m_i:
            raise DecompositionFailed(
                f"could not find {m_i} independent cover components")
        pieces.append((pim, m_i))
    if not blocks:
        raise DecompositionFailed("module has empty top")
    pi = blocks[0]
    for b in blocks[1:]:
        pi = pi.hstack(b)
    if pi.rank() != M.dim:
        raise DecompositionFailed("projective cover is not surjective")
    P = _sum_of_pims(G, f, pieces)
    if P.dim != pi.ncols:
        raise Mismatch("cover shape mismatch")
    return P, pi, pieces


def _pim_hom_matrix(M, bvecs, v_col):
    """Matrix of the map kG.e -> M, x.e -> x.e.v, on the basis rows bvecs."""
    f = M.field
    cols = []
    for j in range(bvecs.shape[0]):
        A = M.algebra_action(bvecs[j])
        cols.append(A @ v_col)
    out = cols[0]
    for c in cols[1:]:
        out = out.hstack(c)
    return out


def _sum_of_pims(group, field, pieces):
    mods = []
    for pim, cnt in pieces:
        mods.extend([pim.module] * cnt)
    if not mods:
        return Module.zero(group, field)
    if len(mods) == 1:
        return mods[0]
    return mods[0].direct_sum(*mods[1:])


def syzygy(M, seed=0):
    """(Omega M, inclusion rows) -- kernel of a minimal projective cover.

    Minimality makes the kernel projective-free automatically, so this is the
    projective-free syzygy of M; projective summands of M are swallowed
    (Omega of a projective module is zero).
    """
    if M.dim == 0:
        return Module.zero(M.group, M.field), None
    P, pi, _pieces = projective_cover(M, seed=seed)
    K = pi.right_kernel()
    if K.nrows == 0:
        return Module.zero(M.group, M.field), None
    sub, _B = P.submodule(K, name=f"Omega({M.name})")
    return sub, K


def cosyzygy(M, seed=0):
    """Omega^{-1} via duality: dual of the syzygy of the dual module."""
    D = M.dual()
    s, _K = syzygy(D, seed=seed)
    out = s.dual(name=f"Omega^-1({M.name})")
    return out


def syzygy_power(M, i, seed=0):
    """Omega^i for any integer i (projective-free by construction)."""
    cur = M
    if i == 0:
        from .decompose import projective_free_part
        cur, _info = projective_free_part(M, seed=seed)
        return cur
    step = syzygy if i > 0 else cosyzygy
    for _ in range(abs(i)):
        if step is syzygy:
            cur, _K = syzygy(cur, seed=seed)
        else:
            cur = cosyzygy(cur, seed=seed)
    return cur


def injective_hull(M, seed=0):
    """(I, iota) with iota: M -> I an injective hull (kG is self-injective)."""
    D = M.dual()
    P, pi, _pieces = projective_cover(D, seed=seed)
    return P.dual(name=f"I({M.name})"), pi.transpose()
