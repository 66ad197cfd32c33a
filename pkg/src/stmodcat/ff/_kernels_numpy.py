"""Numpy implementations of the two hot elimination kernels.

These are the pure-Python/numpy fallbacks for the optional compiled module
`stmodcat.ff._gfcore`; both expose the same entry points:

* ``rref_char2_packed(planes, scale_bits, inv_tab, ncols)`` - in-place reduced
  row echelon form of a char-2 matrix stored as d bit planes packed into
  uint64 words (plane i, bit j of word w = coefficient i of entry 64w+j).
* ``rref_modp_inplace(A, p)`` - in-place RREF of an int64 matrix over a prime
  field, with lazy modular reduction (rows are only reduced when they serve
  as pivot rows; growth is additive and bounded well inside int64).

Both return the list of pivot column indices.
"""

import numpy as np


def _scale_planes(P, c, scale_bits):
    """Multiply a packed row (d, W) by the scalar with encoding c."""
    L = scale_bits[c]
    d = L.shape[0]
    out = np.zeros_like(P)
    for i in range(d):
        for j in range(d):
            if L[i, j]:
                out[i] ^= P[j]
    return out


def rref_char2_packed(planes, scale_bits, inv_tab, ncols):
    n, d, _W = planes.shape
    pivots = []
    r = 0
    weights = (1 << np.arange(d, dtype=np.int64))
    for col in range(ncols):
        if r == n:
            break
        wi, bi = divmod(col, 64)
        colbits = ((planes[:, :, wi] >> np.uint64(bi)) & np.uint64(1)).astype(np.int64)
        vals = colbits @ weights
        nz = np.nonzero(vals[r:])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            planes[[r, pr]] = planes[[pr, r]]
            vals[[r, pr]] = vals[[pr, r]]
        pv = int(vals[r])
        if pv != 1:
            planes[r] = _scale_planes(planes[r], int(inv_tab[pv]), scale_bits)
        vals[r] = 0
        for c in np.unique(vals):
            if c == 0:
                continue
            rows = np.nonzero(vals == c)[0]
            scaled = _scale_planes(planes[r], int(c), scale_bits)
            planes[rows] ^= scaled[None, :, :]
        pivots.append(col)
        r += 1
    return pivots


def rref_modp_inplace(A, p):
    n, m = A.shape
    pivots = []
    r = 0
    for col in range(m):
        if r == n:
            break
        colv = A[r:, col] % p
        nz = np.nonzero(colv)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] %= p
        pv = int(A[r, col])
        if pv != 1:
            A[r] = (A[r] * pow(pv, -1, p)) % p
        factors = A[:, col] % p
        factors[r] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            A[rows] -= factors[rows, None] * A[r][None, :]
        pivots.append(col)
        r += 1
    A %= p
    return pivots
