"""Dense univariate polynomials over GF(p^d).

A polynomial is a tuple of field encodings, lowest degree first, normalized
so that the last entry is nonzero (the zero polynomial is the empty tuple).
Factorization is the classical squarefree / distinct-degree / equal-degree
(Cantor-Zassenhaus) chain; the equal-degree splitting draws from a PRNG
seeded from the polynomial itself, so runs are reproducible, and retry
counts are bounded.
"""

from ..determinism import rng_for
from ..errors import ResourceLimit

ZERO = ()
ONE = (1,)


def normalize(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(a):
    return len(a) - 1  # deg(0) == -1


def is_zero(a):
    return len(a) == 0


def add(f, a, b):
    n = max(len(a), len(b))
    return normalize(f.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                     for i in range(n))


def sub(f, a, b):
    n = max(len(a), len(b))
    return normalize(f.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                     for i in range(n))


def scale(f, a, c):
    if c == 0:
        return ZERO
    return tuple(f.mul(x, c) for x in a)


def mul(f, a, b):
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
    return normalize(out)


def divmod_(f, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = f.inv(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = f.mul(a[i + len(b) - 1], inv_lead)
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                if bj:
                    a[i + j] = f.sub(a[i + j], f.mul(c, bj))
    return normalize(q), normalize(a)


def mod(f, a, b):
    return divmod_(f, a, b)[1]


def monic(f, a):
    if not a:
        return a
    if a[-1] == 1:
        return a
    return scale(f, a, f.inv(a[-1]))


def gcd(f, a, b):
    while b:
        a, b = b, mod(f, a, b)
    return monic(f, a)


def pow_int(f, a, n):
    result = ONE
    while n:
        if n & 1:
            result = mul(f, result, a)
        a = mul(f, a, a)
        n >>= 1
    return result


def xgcd(f, a, b):
    """(g, u, v) with u*a + v*b = g = gcd(a, b), g monic."""
    r0, r1 = normalize(a), normalize(b)
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_(f, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(f, s0, mul(f, q, s1))
        t0, t1 = t1, sub(f, t0, mul(f, q, t1))
    if r0 and r0[-1] != 1:
        c = f.inv(r0[-1])
        r0, s0, t0 = scale(f, r0, c), scale(f, s0, c), scale(f, t0, c)
    return r0, s0, t0


def pow_mod(f, base, n, modp):
    result = mod(f, ONE, modp) if deg(modp) == 0 else ONE
    base = mod(f, base, modp)
    while n:
        if n & 1:
            result = mod(f, mul(f, result, base), modp)
        base = mod(f, mul(f, base, base), modp)
        n >>= 1
    return result


def evaluate(f, a, x):
    acc = 0
    for c in reversed(a):
        acc = f.add(f.mul(acc, x), c)
    return acc


def derivative(f, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        r = i % f.p
        acc = 0
        for _ in range(r):
            acc = f.add(acc, c)
        out.append(acc)
    return normalize(out)


def _pth_root(f, a):
    """For g with g = h(x^p) return h, taking p-th roots of coefficients."""
    root_exp = f.q // f.p  # a^(q/p) is the p-th root in GF(q)
    return normalize(f.pow(a[i], root_exp) for i in range(0, len(a), f.p))


def squarefree_decomposition(f, a):
    """Yu's standard char-p squarefree decomposition: [(factor, mult), ...]."""
    a = monic(f, a)
    out = []

    def rec(g, mult):
        if deg(g) < 1:
            return
        gp = derivative(f, g)
        if is_zero(gp):
            # g is a p-th power
            rec(_pth_root(f, g), mult * f.p)
            return
        c = gcd(f, g, gp)
        w = divmod_(f, g, c)[0]
        i = 1
        while deg(w) > 0:
            y = gcd(f, w, c)
            z = divmod_(f, w, y)[0]
            if deg(z) > 0:
                out.append((monic(f, z), i * mult))
            w = y
            c = divmod_(f, c, y)[0]
            i += 1
        if deg(c) > 0:
            rec(c, mult)

    rec(a, 1)
    return out


def distinct_degree(f, a):
    """[(product_of_irreducibles_of_degree_d, d), ...] for squarefree a."""
    out = []
    x = (0, 1)
    v = a
    h = mod(f, x, v)
    d = 0
    while deg(v) >= 2 * (d + 1):
        d += 1
        h = pow_mod(f, h, f.q, v)
        g = gcd(f, sub(f, h, mod(f, x, v)), v)
        if deg(g) > 0:
            out.append((g, d))
            v = divmod_(f, v, g)[0]
            h = mod(f, h, v)
    if deg(v) > 0:
        out.append((v, deg(v)))
    return out


def _equal_degree_split(f, a, d, rng, budget=200):
    """One nontrivial factor of squarefree a = product of degree-d irreducibles."""
    n = deg(a)
    if n == d:
        return None
    for _ in range(budget):
        g = normalize([f.random_element(rng) for _ in range(n - 1)] + [1])
        if deg(g) < 1:
            continue
        c = gcd(f, g, a)
        if 0 < deg(c) < n:
            return c
        if f.p == 2:
            # trace map over GF(2): T(g) = g + g^2 + g^4 + ... (d*deg2 terms)
            t = mod(f, g, a)
            acc = t
            for _ in range(d * f.d - 1):
                t = pow_mod(f, t, 2, a)
                acc = add(f, acc, t)
            c = gcd(f, acc, a)
        else:
            e = (f.q ** d - 1) // 2
            h = pow_mod(f, g, e, a)
            c = gcd(f, sub(f, h, ONE), a)
        if 0 < deg(c) < n:
            return c
    raise ResourceLimit(f"equal-degree splitting exhausted {budget} attempts")


def equal_degree(f, a, d, rng):
    """All monic irreducible factors of squarefree a (all of degree d)."""
    if deg(a) == d:
        return [monic(f, a)]
    c = _equal_degree_split(f, a, d, rng)
    rest = divmod_(f, a, c)[0]
    return equal_degree(f, c, d, rng) + equal_degree(f, rest, d, rng)


def factor(f, a, seed=0):
    """Full factorization: (unit, [(monic irreducible, multiplicity), ...]).

    Deterministic for fixed input and seed; factors sorted by (degree,
    coefficient tuple).
    """
    a = normalize(a)
    if deg(a) < 1:
        return (a[0] if a else 0), []
    unit = a[-1]
    a = monic(f, a)
    rng = rng_for("poly-factor", f.p, f.d, a, seed=seed)
    out = []
    for sqf, mult in squarefree_decomposition(f, a):
        for prod, d in distinct_degree(f, sqf):
            for irr in equal_degree(f, prod, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (deg(t[0]), t[0]))
    return unit, out


def roots(f, a, seed=0):
    """All roots in the field, with multiplicity: [(root, mult), ...]."""
    _, facs = factor(f, a, seed=seed)
    out = []
    for irr, mult in facs:
        if deg(irr) == 1:
            out.append((f.neg(irr[0]), mult))
    return out


def is_irreducible(f, a, seed=0):
    a = normalize(a)
    if deg(a) < 1:
        return False
    _, facs = factor(f, a, seed=seed)
    return len(facs) == 1 and facs[0][1] == 1
