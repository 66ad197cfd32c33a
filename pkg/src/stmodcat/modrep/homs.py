"""Module homomorphisms, the projectively-factoring subspace, and stable homs.

All maps M -> N are matrices acting on column vectors (shape dim N x dim M).
`vec_row` flattens a map row by row, so vec_row(A X B) = kron(A, B^T) vec_row(X).
"""

import numpy as np

from ..errors import Mismatch
from ..ff.matrix import Matrix


def _kron_sum(field, pairs):
    """sum over the given (X_g, Y_g) pairs of kron(X_g, Y_g).

    Uses integer einsum over prime fields, bit-plane einsum in characteristic
    two, and a generic tabled loop otherwise.
    """
    pairs = list(pairs)
    (a, b), (c, d) = pairs[0][0].shape, pairs[0][1].shape
    XX = np.stack([x.a for x, _ in pairs])
    YY = np.stack([y.a for _, y in pairs])
    if field.d == 1:
        acc = np.einsum("gij,gkl->ikjl", XX.astype(np.int64), YY.astype(np.int64))
        out = (acc % field.p).astype(np.int32)
    elif field.p == 2:
        t_pow = [int(field._exp[k % (field.q - 1)]) if field.q > 2 else 1
                 for k in range(2 * field.d - 1)]
        out4 = np.zeros((a, c, b, d), dtype=np.int32)
        for u in range(field.d):
            Xu = ((XX >> u) & 1).astype(np.int64)
            for v in range(field.d):
                Yv = ((YY >> v) & 1).astype(np.int64)
                par = np.einsum("gij,gkl->ikjl", Xu, Yv) & 1
                out4 ^= par.astype(np.int32) * t_pow[u + v]
        out = out4
    else:
        out4 = np.zeros((a, c, b, d), dtype=np.int32)
        for x, y in pairs:
            term = field.mul_vec(x.a[:, None, :, None], y.a[None, :, None, :])
            out4 = field.add_vec(out4, term)
        out = out4
    return Matrix(field, out.reshape(a * c, b * d))


def _check_pair(M, N):
    if M.group is not N.group:
        raise Mismatch("modules live over different groups")
    if M.field != N.field:
        raise Mismatch("modules live over different fields")


def hom_space(M, N):
    """Basis (list of dimN x dimM matrices) of the kG-linear maps M -> N."""
    _check_pair(M, N)
    f = M.field
    m, n = M.dim, N.dim
    if m == 0 or n == 0:
        return []
    Im = Matrix.identity(f, m)
    In = Matrix.identity(f, n)
    blocks = []
    for gname in M.group.gens:
        blocks.append(In.kron(M.mats[gname].transpose())
                      - N.mats[gname].kron(Im))
    if not blocks:  # trivial group
        K = Matrix.identity(f, n * m)
        return [Matrix(f, K.a[i].reshape(n, m)) for i in range(n * m)]
    stacked = blocks[0]
    for b in blocks[1:]:
        stacked = stacked.vstack(b)
    K = stacked.right_kernel()
    return [Matrix(f, K.a[i].reshape(n, m)) for i in range(K.nrows)]


def end_algebra(M):
    return hom_space(M, M)


def is_hom(phi, M, N):
    """True if the matrix phi commutes with the two generator actions."""
    for gname in M.group.gens:
        if phi @ M.mats[gname] != N.mats[gname] @ phi:
            return False
    return True


def module_generators(M):
    """Small generating set of M, as a matrix whose columns generate."""
    f = M.field
    gens = []
    span = Matrix.zeros(f, 0, M.dim)
    for i in range(M.dim):
        v = np.zeros((1, M.dim), dtype=np.int32)
        v[0, i] = 1
        vm = Matrix(f, v)
        if span.in_row_space(vm):
            continue
        gens.append(vm)
        seed = span.vstack(vm)
        span = M.spin(seed)
        if span.nrows == M.dim:
            break
    if not gens:
        return Matrix.zeros(f, M.dim, 0)
    cols = gens[0]
    for g in gens[1:]:
        cols = cols.vstack(g)
    return cols.transpose()


class PHomSpace:
    """Echelonized span of the maps M -> N that factor through a projective.

    Such maps are exactly the composites (functional-twisted sweeps through a
    free module surjecting onto N), spanned by
        Theta_{i,j}(m) = sum_g  coeff_i(g^{-1}.m) * (g.n_j)
    over coordinate functionals i and module generators n_j of N.
    """

    __slots__ = ("field", "shape", "rows", "pivots", "dim")

    def __init__(self, M, N):
        _check_pair(M, N)
        f = M.field
        G = M.group
        n, m = N.dim, M.dim
        self.field = f
        self.shape = (n, m)
        if n == 0 or m == 0:
            self.rows = Matrix.zeros(f, 0, n * m)
            self.pivots = []
            self.dim = 0
            return
        NG = module_generators(N)
        pairs = []
        for g in range(G.order):
            Ag = N.action(g) @ NG                      # columns: g . n_j
            Bg = M.action(G.inverse(g)).transpose()    # column i: coords of coeff_i(g^{-1} .)
            pairs.append((Ag.transpose(), Bg.transpose()))
        T = _kron_sum(f, pairs)                        # rows (j,i) -> vec_row(Theta_{i,j})
        R, piv = T.rref()
        keep = R.a[: len(piv), :]
        self.rows = Matrix(f, keep)
        self.pivots = piv
        self.dim = len(piv)

    def contains(self, phi):
        if phi.shape != self.shape:
            raise Mismatch(f"map shape {phi.shape} != {self.shape}")
        v = Matrix(self.field, phi.a.reshape(1, -1))
        if self.dim == 0:
            return not np.any(v.a)
        return self.rows.in_row_space(v)


def phom_space(M, N):
    return PHomSpace(M, N)


def stable_hom_basis(M, N, phom=None):
    """(representatives, hom_dim, phom_dim) for the stable hom space.

    Representatives are hom-space basis elements that remain independent
    modulo the projectively-factoring maps.
    """
    homs = hom_space(M, N)
    if phom is None:
        phom = PHomSpace(M, N)
    f = M.field
    n, m = N.dim, M.dim
    ech = phom.rows
    reps = []
    for phi in homs:
        v = Matrix(f, phi.a.reshape(1, -1))
        if ech.nrows and ech.in_row_space(v):
            continue
        if not ech.nrows and not np.any(v.a):
            continue
        reps.append(phi)
        ech = ech.vstack(v).row_space_basis()
    return reps, len(homs), phom.dim


def stable_end_dim(M):
    reps, _h, _p = stable_hom_basis(M, M)
    return len(reps)
