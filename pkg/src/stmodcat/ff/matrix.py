"""Dense exact matrices over GF(p^d).

Entries are stored as a numpy int32 array of field encodings (see field.py).
All arithmetic is exact; there are no floats or tolerances anywhere.  Row
reduction dispatches to the kernel backend; multiplication uses integer
matmul tricks (bit planes in char 2, lazy mod-p otherwise) so that the numpy
BLAS-free integer paths stay fast for the dimensions this package meets.
"""

import numpy as np

from ..errors import FieldMismatch, Mismatch, NotSquare
from . import kernels


class Matrix:
    __slots__ = ("field", "a")

    def __init__(self, field, data):
        self.field = field
        a = np.asarray(data, dtype=np.int32)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise Mismatch(f"matrix data must be 2-dimensional, got {a.ndim}")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise Mismatch("entry encodings out of range for the field")
        self.a = a

    # -- constructors

    @classmethod
    def zeros(cls, field, n, m):
        return cls(field, np.zeros((n, m), dtype=np.int32))

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.int32))

    @classmethod
    def from_rows(cls, field, rows):
        if not rows:
            return cls.zeros(field, 0, 0)
        return cls(field, np.array(rows, dtype=np.int32))

    def copy(self):
        return Matrix(self.field, self.a.copy())

    # -- shape & identity

    @property
    def nrows(self):
        return self.a.shape[0]

    @property
    def ncols(self):
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.a.shape == other.a.shape
                and bool(np.array_equal(self.a, other.a)))

    def __hash__(self):
        return hash((self.field, self.a.shape, self.a.tobytes()))

    def key(self):
        """Stable bytes key for dict/set usage."""
        return (self.a.shape, self.a.tobytes())

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.a.tolist()!r})"

    def is_zero(self):
        return not np.any(self.a)

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    # -- ring operations

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise Mismatch(f"shape {self.shape} + {other.shape}")
        return Matrix(self.field, self.field.add_vec(self.a, other.a))

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise Mismatch(f"shape {self.shape} - {other.shape}")
        return Matrix(self.field, self.field.sub_vec(self.a, other.a))

    def __neg__(self):
        return Matrix(self.field, self.field.neg_vec(self.a))

    def scale(self, c):
        return Matrix(self.field, self.field.mul_vec(self.a, np.int32(c)))

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise Mismatch(f"matmul {self.shape} @ {other.shape}")
        f = self.field
        if self.nrows == 0 or other.ncols == 0 or self.ncols == 0:
            return Matrix.zeros(f, self.nrows, other.ncols)
        if f.p == 2 and f.d == 1:
            c = (self.a.astype(np.int64) @ other.a.astype(np.int64)) & 1
            return Matrix(f, c.astype(np.int32))
        if f.p == 2:
            return Matrix(f, _matmul_char2(self.a, other.a, f))
        if f.d == 1:
            c = (self.a.astype(np.int64) @ other.a.astype(np.int64)) % f.p
            return Matrix(f, c.astype(np.int32))
        return Matrix(f, _matmul_generic(self.a, other.a, f))

    def pow(self, n):
        if self.nrows != self.ncols:
            raise NotSquare("matrix power needs a square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        if n < 0:
            base = base.inverse()
            n = -n
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    # -- layout

    def transpose(self):
        return Matrix(self.field, self.a.T.copy())

    def hstack(self, other):
        self._check(other)
        return Matrix(self.field, np.hstack([self.a, other.a]))

    def vstack(self, other):
        self._check(other)
        return Matrix(self.field, np.vstack([self.a, other.a]))

    def submatrix(self, rows, cols):
        return Matrix(self.field, self.a[np.ix_(list(rows), list(cols))])

    def row(self, i):
        return Matrix(self.field, self.a[i:i + 1, :])

    def col(self, j):
        return Matrix(self.field, self.a[:, j:j + 1])

    def kron(self, other):
        """Kronecker product (tensor product of linear maps)."""
        self._check(other)
        f = self.field
        n, m = self.shape
        r, s = other.shape
        out = f.mul_vec(self.a[:, None, :, None], other.a[None, :, None, :])
        return Matrix(f, out.reshape(n * r, m * s))

    @classmethod
    def block_diag(cls, field, blocks):
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = np.zeros((n, m), dtype=np.int32)
        i = j = 0
        for b in blocks:
            out[i:i + b.nrows, j:j + b.ncols] = b.a
            i += b.nrows
            j += b.ncols
        return cls(field, out)

    # -- elimination-derived operations

    def rref(self):
        """(R, pivot_columns) with R fully reduced."""
        R, piv = kernels.rref(self.a, self.field)
        return Matrix(self.field, R), piv

    def rank(self):
        return len(self.rref()[1])

    def right_kernel(self):
        """Matrix whose rows are a reduced basis of {v : self @ v = 0}."""
        f = self.field
        R, piv = self.rref()
        m = self.ncols
        free = [j for j in range(m) if j not in piv]
        if not free:
            return Matrix.zeros(f, 0, m)
        K = np.zeros((len(free), m), dtype=np.int32)
        for idx, j in enumerate(free):
            K[idx, j] = 1
            for r, pc in enumerate(piv):
                K[idx, pc] = f.neg(int(R.a[r, j]))
        return Matrix(f, K)

    def solve_right(self, b):
        """One X with self @ X = b, or None if the system is inconsistent."""
        self._check(b)
        if b.nrows != self.nrows:
            raise Mismatch(f"solve {self.shape} X = {b.shape}")
        f = self.field
        aug = self.hstack(b)
        R, piv = aug.rref()
        m = self.ncols
        for r in range(len(piv)):
            if piv[r] >= m:
                return None  # pivot in the augmented block: inconsistent
        X = np.zeros((m, b.ncols), dtype=np.int32)
        for r, pc in enumerate(piv):
            X[pc, :] = R.a[r, m:]
        return Matrix(f, X)

    def inverse(self):
        if self.nrows != self.ncols:
            raise NotSquare("inverse needs a square matrix")
        X = self.solve_right(Matrix.identity(self.field, self.nrows))
        if X is None or (self.nrows and len(self.rref()[1]) < self.nrows):
            raise Mismatch("matrix is singular")
        return X

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows

    def row_space_basis(self):
        """Matrix of nonzero rows of the RREF (canonical row-space basis)."""
        R, piv = self.rref()
        return Matrix(self.field, R.a[: len(piv), :].copy())

    def column_space_basis(self):
        return self.transpose().row_space_basis().transpose()

    def in_row_space(self, v):
        """Is each row of v in the row space of self?"""
        basis = self.row_space_basis()
        stacked = basis.vstack(v)
        return stacked.rank() == basis.nrows

    # -- invariants

    def trace(self):
        if self.nrows != self.ncols:
            raise NotSquare("trace needs a square matrix")
        f = self.field
        t = 0
        for i in range(self.nrows):
            t = f.add(t, int(self.a[i, i]))
        return t

    def charpoly(self):
        """Characteristic polynomial of a square matrix.

        Returned as an encoding tuple, lowest degree first, monic.  Uses a
        similarity reduction to Hessenberg form followed by the standard
        three-term recurrence on leading principal minors.
        """
        if self.nrows != self.ncols:
            raise NotSquare("charpoly needs a square matrix")
        f = self.field
        n = self.nrows
        if n == 0:
            return (1,)
        H = self.a.astype(np.int32).copy()
        for j in range(n - 2):
            nz = np.nonzero(H[j + 1:, j])[0]
            if nz.size == 0:
                continue
            pr = j + 1 + int(nz[0])
            if pr != j + 1:
                H[[j + 1, pr]] = H[[pr, j + 1]]
                H[:, [j + 1, pr]] = H[:, [pr, j + 1]]
            inv = f.inv(int(H[j + 1, j]))
            for r in range(j + 2, n):
                c = int(H[r, j])
                if c:
                    factor = f.mul(c, inv)
                    H[r, :] = f.sub_vec(H[r, :], f.mul_vec(np.int32(factor), H[j + 1, :]))
                    H[:, j + 1] = f.add_vec(H[:, j + 1], f.mul_vec(np.int32(factor), H[:, r]))
        # recurrence: p_0 = 1, p_k in terms of p_0..p_{k-1}
        polys = [(1,)]
        from . import poly as fp
        for k in range(1, n + 1):
            x_minus = (f.neg(int(H[k - 1, k - 1])), 1)
            pk = fp.mul(f, x_minus, polys[k - 1])
            prod = 1
            for m in range(1, k):
                prod = f.mul(prod, int(H[k - m, k - m - 1]))
                if prod == 0:
                    break
                coef = f.mul(int(H[k - 1 - m, k - 1]), prod)
                if coef:
                    pk = fp.sub(f, pk, fp.scale(f, polys[k - 1 - m], coef))
            polys.append(pk)
        return polys[n]

    def minpoly(self):
        """Minimal polynomial (monic, lowest degree first)."""
        if self.nrows != self.ncols:
            raise NotSquare("minpoly needs a square matrix")
        f = self.field
        n = self.nrows
        if n == 0:
            return (1,)
        # find the dependency among I, A, A^2, ... of lowest degree
        iterates = [Matrix.identity(f, n)]
        flat = [iterates[0].a.reshape(-1)]
        while True:
            nxt = iterates[-1] @ self
            iterates.append(nxt)
            flat.append(nxt.a.reshape(-1))
            stacked = Matrix(f, np.array(flat, dtype=np.int32))
            if stacked.rank() < len(flat):
                break
        # last iterate is a combination of the previous ones
        prev = Matrix(f, np.array(flat[:-1], dtype=np.int32)).transpose()
        target = Matrix(f, np.array([flat[-1]], dtype=np.int32)).transpose()
        sol = prev.solve_right(target)
        deg = len(flat) - 1
        coeffs = [f.neg(int(sol.a[i, 0])) for i in range(deg)] + [1]
        return tuple(coeffs)

    def det(self):
        cp = self.charpoly()
        f = self.field
        c0 = cp[0]
        return c0 if self.nrows % 2 == 0 else f.neg(c0)

    def apply_poly(self, coeffs):
        """Evaluate a polynomial (encodings, low first) at this matrix."""
        if self.nrows != self.ncols:
            raise NotSquare("polynomial evaluation needs a square matrix")
        f = self.field
        result = Matrix.zeros(f, self.nrows, self.nrows)
        power = Matrix.identity(f, self.nrows)
        for i, c in enumerate(coeffs):
            if c:
                result = result + power.scale(c)
            if i < len(coeffs) - 1:
                power = power @ self
        return result


def _matmul_char2(a, b, f):
    """GF(2^d) matmul via polynomial multiplication of bit planes."""
    d = f.d
    A = [((a >> i) & 1).astype(np.int64) for i in range(d)]
    B = [((b >> i) & 1).astype(np.int64) for i in range(d)]
    conv = [None] * (2 * d - 1)
    for i in range(d):
        for j in range(d):
            prod = (A[i] @ B[j]) & 1
            conv[i + j] = prod if conv[i + j] is None else (conv[i + j] ^ prod)
    out = np.zeros(conv[0].shape, dtype=np.int32)
    for k in range(2 * d - 1):
        if conv[k] is None:
            continue
        tk = f.pow(f.generator, k) if k >= d else (1 << k)
        for i in range(d):
            if (tk >> i) & 1:
                out ^= conv[k].astype(np.int32) << i
    return out


def _matmul_generic(a, b, f):
    """Table-driven matmul for odd-characteristic extension fields."""
    n, m = a.shape
    _m, s = b.shape
    out = np.zeros((n, s), dtype=np.int32)
    for k in range(m):
        out = f.add_vec(out, f.mul_vec(a[:, k:k + 1], b[k:k + 1, :]))
    return out
