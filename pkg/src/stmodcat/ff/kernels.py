"""Kernel dispatch: compiled `_gfcore` if importable, else numpy fallbacks.

The public entry point is ``rref(a, field)`` on int32 encoding matrices; it
packs/unpacks char-2 matrices into bit planes around whichever elimination
backend is active.  ``BACKEND`` records the choice (benchmarks and tests read
it; ``STMODCAT_FORCE_FALLBACK=1`` forces numpy).
"""

import os
import sys

import numpy as np

from . import _kernels_numpy

_impl = None
if not os.environ.get("STMODCAT_FORCE_FALLBACK"):
    try:
        from . import _gfcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = None

BACKEND = "cython" if _impl is not None else "numpy"
_char2 = (_impl or _kernels_numpy).rref_char2_packed
_modp = (_impl or _kernels_numpy).rref_modp_inplace

assert sys.byteorder == "little", "bit-plane packing assumes little-endian"


def pack_bits(bits):
    """(n, m) 0/1 array -> (n, W) uint64, bit j of word w = column 64w+j."""
    n, m = bits.shape
    W = max(1, (m + 63) // 64)
    padded = np.zeros((n, W * 64), dtype=np.uint8)
    padded[:, :m] = bits
    by = np.packbits(padded.reshape(n * W * 8, 8), axis=-1, bitorder="little")
    return by.reshape(n, W * 8).view(np.uint64).reshape(n, W)


def unpack_bits(words, m):
    """Inverse of pack_bits."""
    n, W = words.shape
    by = np.ascontiguousarray(words).view(np.uint8).reshape(n, W * 8)
    return np.unpackbits(by, axis=-1, bitorder="little")[:, :m]


def pack_encodings(a, d):
    """Encodings (n, m) int -> planes (n, d, W) uint64 (char 2 only)."""
    n, m = a.shape
    planes = [pack_bits(((a >> i) & 1).astype(np.uint8)) for i in range(d)]
    return np.stack(planes, axis=1)


def unpack_encodings(planes, m):
    n, d, _W = planes.shape
    out = np.zeros((n, m), dtype=np.int32)
    for i in range(d):
        out |= unpack_bits(planes[:, i], m).astype(np.int32) << i
    return out


def _rref_generic(A, field):
    """Table-driven RREF for odd-characteristic extension fields."""
    n, m = A.shape
    pivots = []
    r = 0
    for col in range(m):
        if r == n:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        pv = int(A[r, col])
        if pv != 1:
            A[r] = field.mul_vec(A[r], np.int32(field.inv(pv)))
        factors = A[:, col].copy()
        factors[r] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            A[rows] = field.sub_vec(
                A[rows], field.mul_vec(factors[rows, None], A[r][None, :]))
        pivots.append(col)
        r += 1
    return pivots


def rref(a, field):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    a = np.asarray(a, dtype=np.int32)
    n, m = a.shape
    if n == 0 or m == 0:
        return a.copy(), ()
    if field.p == 2:
        planes = pack_encodings(a, field.d)
        pivots = _char2(planes, field._scale_bits, field._inv_tab, m)
        return unpack_encodings(planes, m), tuple(pivots)
    if field.d == 1:
        A = a.astype(np.int64)
        pivots = _modp(A, field.p)
        return A.astype(np.int32), tuple(pivots)
    A = a.copy()
    pivots = _rref_generic(A, field)
    return A, tuple(pivots)
