"""Finite fields GF(p^d) with table-driven exact arithmetic.

Representation: a field element is an integer e in [0, q) whose base-p digits
are the coefficients of its polynomial representative, lowest degree first:
e = c0 + c1*p + ... + c_{d-1}*p^{d-1}  <->  c0 + c1*t + ... + c_{d-1}*t^{d-1},
where t is the class of x modulo the field's defining polynomial.

The defining polynomial is chosen deterministically: the monic irreducible of
degree d whose non-leading coefficient vector (c0, ..., c_{d-1}), read as the
integer c0 + c1*p + ..., is smallest among those for which t generates the
multiplicative group.  With t primitive, discrete log/exp tables give O(1)
multiplication and inversion.
"""

from functools import lru_cache

import numpy as np

from ..errors import FieldTooLarge, Mismatch, NoSuchRoot, NotPrime

MAX_Q = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over the prime field, used only for the modulus search

def _pf_mulmod(a, b, mod, p):
    """(a*b) mod `mod` over GF(p); polys are coefficient lists, low first."""
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    d = len(mod) - 1
    lead_inv = pow(mod[-1], p - 2, p)
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            f = (c * lead_inv) % p
            for j, mj in enumerate(mod):
                res[i - d + j] = (res[i - d + j] - f * mj) % p
    res = res[:d]
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return res


def _pf_powmod(a, n, mod, p):
    result = [1]
    base = list(a)
    while n:
        if n & 1:
            result = _pf_mulmod(result, base, mod, p)
        base = _pf_mulmod(base, base, mod, p)
        n >>= 1
    return result


def _pf_gcd(a, b, p):
    a, b = list(a), list(b)
    while any(b):
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        while len(b) > 1 and b[-1] == 0:
            b.pop()
        if len(a) < len(b):
            a, b = b, a
            continue
        # a -= lead(a)/lead(b) * x^(da-db) * b
        f = (a[-1] * pow(b[-1], p - 2, p)) % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - f * bj) % p
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if not any(a):
            a, b = b, [0]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pf_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _pf_is_irreducible(f, p):
    """Rabin test: f (monic, degree d >= 1) irreducible over GF(p)?"""
    d = len(f) - 1
    if d == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    x = [0, 1]
    xq = _pf_powmod(x, p ** d, f, p)
    if any(_pf_sub(xq, x, p)):  # need x^(p^d) == x mod f
        return False
    for r in _prime_factors(d):
        e = d // r
        xe = _pf_powmod(x, p ** e, f, p)
        g = _pf_sub(xe, x, p)
        if not any(g):
            return False
        if len(_pf_gcd(list(f), g, p)) > 1:
            return False
    return True


def _pf_x_is_primitive(f, p, d):
    """Does x generate the multiplicative group of GF(p)[x]/(f)?"""
    q1 = p ** d - 1
    for r in _prime_factors(q1):
        xr = _pf_powmod([0, 1], q1 // r, f, p)
        if xr == [1]:
            return False
    return True


def find_modulus(p, d):
    """Deterministic defining polynomial: see module docstring."""
    for code in range(p ** d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        f = coeffs + [1]  # monic
        if _pf_is_irreducible(f, p) and _pf_x_is_primitive(f, p, d):
            return tuple(f)
    raise AssertionError("no primitive irreducible found (impossible)")


class FF:
    """The finite field GF(p^d), with vectorized numpy arithmetic."""

    def __init__(self, p, d=1):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if d < 1:
            raise Mismatch(f"extension degree must be >= 1, got {d}")
        q = p ** d
        if q > MAX_Q:
            raise FieldTooLarge(f"GF({p}^{d}) has order {q} > {MAX_Q}")
        self.p = p
        self.d = d
        self.q = q
        if d == 1:
            self.modulus = (0, 1)  # placeholder: prime field needs none
        else:
            self.modulus = find_modulus(p, d)
        self._build_tables()

    # -- construction of log/exp (and small add) tables

    def _mul_slow(self, a, b):
        """Polynomial multiplication of encodings, for table building."""
        p, d = self.p, self.d
        if d == 1:
            return (a * b) % p
        ac = self.coeffs(a)
        bc = self.coeffs(b)
        res = [0] * (2 * d - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    res[i + j] = (res[i + j] + ai * bj) % p
        for i in range(2 * d - 2, d - 1, -1):
            c = res[i]
            if c:
                for j in range(d + 1):
                    res[i - d + j] = (res[i - d + j] - c * self.modulus[j]) % p
        return self.from_coeffs(res[:d])

    def _build_tables(self):
        p, d, q = self.p, self.d, self.q
        # generator: t (class of x) for d > 1; smallest primitive root mod p else
        if d == 1:
            g = None
            for cand in range(2, p):
                if all(pow(cand, (p - 1) // r, p) != 1
                       for r in _prime_factors(p - 1)):
                    g = cand
                    break
            if g is None:
                g = 1  # p == 2 or p == 3 handled: p==2 -> q-1 == 1
                if p == 3:
                    g = 2
            self.generator = g
        else:
            self.generator = p  # encoding of t

        exp = np.zeros(2 * (q - 1), dtype=np.int32)
        log = np.zeros(q, dtype=np.int32)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, self.generator)
        assert x == 1, "generator order mismatch"
        exp[q - 1:] = exp[: q - 1]
        self._exp = exp
        self._log = log
        log[0] = -1  # sentinel; callers must mask zeros

        if p == 2:
            self._add_table = None  # XOR
        elif q <= 4096:
            idx = np.arange(q, dtype=np.int64)
            digits = []
            tmp = idx.copy()
            for _ in range(d):
                digits.append(tmp % p)
                tmp //= p
            add = np.zeros((q, q), dtype=np.int32)
            acc = np.zeros((q, q), dtype=np.int64)
            mult = 1
            for dd in digits:
                acc += ((dd[:, None] + dd[None, :]) % p) * mult
                mult *= p
            add[:, :] = acc
            self._add_table = add
        else:
            self._add_table = None

        self._neg_tab = np.array([self.neg(a) for a in range(q)], dtype=np.int32)
        self._inv_tab = np.array(
            [0] + [self.inv(a) for a in range(1, q)], dtype=np.int32)

        # scalar-multiplication bit matrices for char-2 bitplane kernels:
        # L[c] is d x d over GF(2) with (c*v) planes = L[c] @ v planes.
        if p == 2:
            L = np.zeros((q, d, d), dtype=np.uint8)
            for c in range(q):
                for j in range(d):
                    prod = self._mul_slow(c, 1 << j)
                    for i in range(d):
                        L[c, i, j] = (prod >> i) & 1
            self._scale_bits = L
        else:
            self._scale_bits = None

    # -- scalar ops

    def coeffs(self, e):
        """Base-p digits of the encoding = polynomial coefficients, low first."""
        out = []
        for _ in range(self.d):
            out.append(e % self.p)
            e //= self.p
        return tuple(out)

    def from_coeffs(self, cs):
        if len(cs) > self.d:
            raise Mismatch(f"too many coefficients for degree-{self.d} field")
        e = 0
        for c in reversed(list(cs)):
            e = e * self.p + (c % self.p)
        return e

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return self.from_coeffs([(x + y) % self.p
                                 for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a):
        if self.p == 2:
            return a
        return self.from_coeffs([(-x) % self.p for x in self.coeffs(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("inverse of zero in finite field")
            return 0
        e = (self._log[a] * n) % (self.q - 1)
        return int(self._exp[e])

    # -- vectorized ops on numpy int32 arrays of encodings

    def add_vec(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, b]
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int32)
        mult = 1
        aa, bb = np.broadcast_arrays(a, b)
        aa = aa.astype(np.int64).copy()
        bb = bb.astype(np.int64).copy()
        for _ in range(self.d):
            out += (((aa % self.p) + (bb % self.p)) % self.p).astype(np.int32) * mult
            aa //= self.p
            bb //= self.p
            mult *= self.p
        return out

    def neg_vec(self, a):
        if self.p == 2:
            return a.copy()
        zero = np.zeros_like(a)
        return self.sub_vec(zero, a)

    def sub_vec(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, self._neg_tab[b]]
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int32)
        mult = 1
        aa, bb = np.broadcast_arrays(a, b)
        aa = aa.astype(np.int64).copy()
        bb = bb.astype(np.int64).copy()
        for _ in range(self.d):
            out += (((aa % self.p) - (bb % self.p)) % self.p).astype(np.int32) * mult
            aa //= self.p
            bb //= self.p
            mult *= self.p
        return out

    def neg_table(self):
        return self._neg_tab

    def mul_vec(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        nz = (a != 0) & (b != 0)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int32)
        if np.any(nz):
            la = self._log[np.broadcast_to(a, out.shape)[nz]]
            lb = self._log[np.broadcast_to(b, out.shape)[nz]]
            out[nz] = self._exp[la + lb]
        return out

    def inv_vec(self, a):
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in finite field")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)].astype(np.int32)

    # -- roots of unity

    def primitive_root_of_unity(self, n):
        """An element of multiplicative order exactly n, or NoSuchRoot."""
        if n <= 0 or (self.q - 1) % n != 0:
            raise NoSuchRoot(
                f"GF({self.p}^{self.d}) has no primitive {n}-th root of unity: "
                f"{n} does not divide {self.q - 1}")
        return int(self._exp[(self.q - 1) // n]) if n > 1 else 1

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        la = int(self._log[a])
        if la == 0:
            return 1
        from math import gcd
        return (self.q - 1) // gcd(la, self.q - 1)

    def random_element(self, rng):
        return rng.randrange(self.q)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.q)

    # -- identity & description

    def __eq__(self, other):
        return (isinstance(other, FF) and self.p == other.p and self.d == other.d)

    def __hash__(self):
        return hash((self.p, self.d))

    def __repr__(self):
        if self.d == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.d};{','.join(map(str, self.modulus))})"

    def describe(self):
        return {
            "p": self.p,
            "d": self.d,
            "q": self.q,
            "modulus": list(self.modulus) if self.d > 1 else None,
        }


@lru_cache(maxsize=None)
def GF(p, d=1):
    """Cached field constructor: GF(2,4) is built once per process."""
    return FF(p, d)
