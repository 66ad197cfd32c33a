"""Syzygy powers of the trivial module, with caching and periodicity.

Per (group, field) there is one cache holding the projective-free modules
Omega^i(k) for integers i (positive = syzygy, negative = cosyzygy).  Once a
periodicity certificate is installed, lookups reduce the exponent modulo the
period, so arbitrarily large shifts stay cheap.  The cache is the only
mutable shared state in the package; a lock makes it safe to use from
several threads (single writer at a time, readers go through the lock too).
"""

import threading

from ..errors import Mismatch
from ..modrep.covers import cosyzygy, syzygy
from ..modrep.homs import is_hom
from ..modrep.module import Module
from ..modrep.structure import find_isomorphism

_CACHES = {}
_CACHES_LOCK = threading.Lock()


class PeriodicityCertificate:
    """Witnessed statement that Omega^period(k) is stably trivial."""

    __slots__ = ("group_label", "field_order", "period", "witness")

    def __init__(self, group_label, field_order, period, witness):
        self.group_label = group_label
        self.field_order = field_order
        self.period = period
        self.witness = witness

    def __repr__(self):
        return (f"PeriodicityCertificate({self.group_label}, "
                f"q={self.field_order}, period={self.period})")


class SuspensionCache:
    """Cache of Omega^i(k) for one (group, field)."""

    def __init__(self, group, field):
        self.group = group
        self.field = field
        self.lock = threading.RLock()
        self.certificate = None
        k = Module.trivial(group, field, name="k")
        self.modules = {0: k}
        self._lo = 0
        self._hi = 0

    def omega(self, i, seed=0):
        """The projective-free module Omega^i(k)."""
        with self.lock:
            if self.certificate is not None:
                i = i % self.certificate.period
            if i in self.modules:
                return self.modules[i]
            while self._hi < i:
                nxt, _ = syzygy(self.modules[self._hi], seed=seed)
                self._hi += 1
                self.modules[self._hi] = nxt.rename(f"O^{self._hi}(k)")
            while self._lo > i:
                nxt = cosyzygy(self.modules[self._lo], seed=seed)
                self._lo -= 1
                self.modules[self._lo] = nxt.rename(f"O^{self._lo}(k)")
            return self.modules[i]

    def install(self, cert):
        with self.lock:
            if self.certificate is None:
                self.certificate = cert


def suspension_cache(group, field):
    """The shared cache for (group, field), created on first use."""
    key = (id(group), field.p, field.d)
    with _CACHES_LOCK:
        cache = _CACHES.get(key)
        if cache is None:
            cache = SuspensionCache(group, field)
            _CACHES[key] = cache
        return cache


def omega_power_of_k(group, field, i, seed=0):
    """Omega^i(k), projective-free, via the shared cache."""
    return suspension_cache(group, field).omega(i, seed=seed)


def omega_period(group, field, bound=64, seed=0):
    """Least d <= bound with Omega^d(k) stably trivial, with witness.

    Returns a PeriodicityCertificate (installed into the cache so later
    exponent lookups reduce modulo d), or None if no period shows up
    within the bound.
    """
    if bound < 1 or bound > 64:
        raise Mismatch("period search bound must be between 1 and 64")
    cache = suspension_cache(group, field)
    k = cache.omega(0)
    for d in range(1, bound + 1):
        M = cache.omega(d, seed=seed)
        if M.dim != k.dim:
            continue
        w = find_isomorphism(M, k, seed=seed)
        if w is None:
            continue
        if not is_hom(w, M, k) or not w.is_invertible():
            raise Mismatch("periodicity witness failed verification")
        cert = PeriodicityCertificate(group.label, field.q, d, w)
        cache.install(cert)
        return cert
    return None
