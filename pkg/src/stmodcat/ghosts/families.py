"""Test families for ghost detection.

A *test family* is the set of objects against which a map is probed: a map is
a family-ghost when every composite (test object) -> source -> target is
stably trivial.  Three families are supported:

- ``trivial``: all suspensions of the trivial module k,
- ``simples``: all suspensions of every simple module,
- ``strong``:  all suspensions of the modules k induced up from every
  subgroup (one representative per conjugacy class of subgroups).

Ghost-ness quantifies over suspensions Omega~^i for *all* integers i.  Two
situations make that quantifier finite and the verdict exact:

- the trivial module is Omega-periodic with period d, in which case
  Omega~^(i+d) M is stably isomorphic to Omega~^i M for every module M and a
  full residue system mod d suffices; or
- a structural criterion replaces the suspension sweep (handled in detect).

Otherwise detection is windowed: indices range over |i| <= W and verdicts are
reported as in-window only, never as exact.
"""

from ..errors import Mismatch
from ..modrep.covers import syzygy, cosyzygy
from ..modrep.decompose import projective_free_part
from ..modrep.induction import induce_module
from ..modrep.module import Module
from ..modrep.structure import simple_modules
from ..stable.tate import omega_period, suspension_cache

KINDS = ("trivial", "simples", "strong")

#: Iteration cap for the period search on the trivial module.  Every group
#: in the built-in registry with a periodic trivial module has period <= 12
#: (cyclic p-groups have period <= 2; the SL(2,p) normalizers have period
#: 2*ord(2 mod p-1) <= 2(p-1)).
PERIOD_SEARCH_BOUND = 16


class TestObject:
    """One probe: a suspension Omega~^index of a family generator."""

    __slots__ = ("label", "generator", "index", "module")

    def __init__(self, label, generator, index, module):
        self.label = label
        self.generator = generator
        self.index = index
        self.module = module

    def __repr__(self):
        return f"TestObject({self.label}, dim={self.module.dim})"


class TestFamily:
    """A named family of test objects over a fixed group and field."""

    __slots__ = ("kind", "group", "field", "window", "seed",
                 "_generators", "_period", "_objects_cache", "_subs")

    def __init__(self, kind, group, field, window=None, seed=0):
        if kind not in KINDS:
            raise Mismatch(f"unknown test family kind {kind!r}")
        if window is not None and window < 1:
            raise Mismatch("window must be a positive integer")
        self.kind = kind
        self.group = group
        self.field = field
        self.window = window
        self.seed = seed
        self._generators = None
        self._period = -1  # -1 = not yet computed; None = not periodic
        self._objects_cache = {}
        self._subs = None

    # -- generators ------------------------------------------------------

    def generators(self):
        """(label, module) pairs generating the family, projective parts
        stripped; generators that are stably zero are dropped."""
        if self._generators is not None:
            return self._generators
        gens = []
        if self.kind == "trivial":
            gens.append(("k", Module.trivial(self.group, self.field)))
        elif self.kind == "simples":
            for S in simple_modules(self.group, self.field, seed=self.seed):
                gens.append((S.name, S))
        else:
            gens.extend(self._induced_generators())
        kept = []
        for label, T in gens:
            pf, _info = projective_free_part(T, seed=self.seed)
            if pf.dim == 0:
                continue
            kept.append((label, pf.rename(label)))
        self._generators = kept
        return kept

    def _induced_generators(self):
        """k induced from one subgroup per conjugacy class (skipping the
        trivial subgroup, whose induced module is free)."""
        out = []
        for elems in self.group.subgroup_conjugacy_representatives():
            if len(elems) == 1:
                continue
            sub, emb = self.group.as_subgroup(elems)
            kH = Module.trivial(sub, self.field)
            label = f"k^(|H|={len(elems)}:{min(e for e in elems if e != 0)})"
            if len(elems) == self.group.order:
                label = "k"
                ind = Module.trivial(self.group, self.field)
            else:
                ind, _reps = induce_module(kH, self.group, sub, emb,
                                           name=label)
            out.append((label, ind))
        return out

    def subgroup_contexts(self):
        """For the strong family: one (label, subgroup, embedding) triple per
        conjugacy class of nontrivial proper subgroups, plus the whole group
        itself (labelled "G").  A map is a strong ghost exactly when its
        restriction to each of these subgroups is a ghost there, so detection
        can recurse subgroup by subgroup instead of sweeping induced objects.
        """
        if self.kind != "strong":
            raise Mismatch("subgroup contexts only apply to the strong family")
        if self._subs is not None:
            return self._subs
        out = []
        for elems in self.group.subgroup_conjugacy_representatives():
            if len(elems) == 1:
                continue
            if len(elems) == self.group.order:
                label = "G"
            else:
                label = f"H(|H|={len(elems)}:{min(e for e in elems if e != 0)})"
            sub, emb = self.group.as_subgroup(elems, label=label)
            out.append((label, sub, emb))
        self._subs = out
        return out

    # -- periodicity -----------------------------------------------------

    def period_certificate(self):
        """Witnessed periodicity of the trivial module, or None if no
        period was found within the search bound."""
        if self._period == -1:
            self._period = omega_period(
                self.group, self.field, bound=PERIOD_SEARCH_BOUND,
                seed=self.seed)
        return self._period

    def period(self):
        """Omega-period of the trivial module, or None if none was found
        within the search bound.  A period makes every orbit finite."""
        cert = self.period_certificate()
        return None if cert is None else cert.period

    @property
    def exact(self):
        """True when the index sweep is provably complete."""
        return self.period() is not None

    # -- test objects ----------------------------------------------------

    def indices(self, default_window):
        d = self.period()
        if d is not None:
            return list(range(d))
        W = self.window if self.window is not None else max(1, default_window)
        return list(range(-W, W + 1))

    def test_objects(self, default_window):
        """All probes for the given window (ignored when periodic)."""
        key = None if self.period() is not None else (
            self.window if self.window is not None else max(1, default_window))
        cached = self._objects_cache.get(key)
        if cached is not None:
            return cached
        idx = self.indices(default_window)
        out = []
        for label, T in self.generators():
            orbit = _omega_orbit(T, idx, self.seed)
            for i in idx:
                mod = orbit.get(i)
                if mod is None or mod.dim == 0:
                    continue
                out.append(TestObject(f"O^{i}({label})", label, i, mod))
        self._objects_cache[key] = out
        return out

    def __repr__(self):
        per = self.period()
        tag = f"period={per}" if per is not None else f"window={self.window}"
        return (f"TestFamily({self.kind}, {self.group.label}, "
                f"GF({self.field.q}), {tag})")


def _omega_orbit(T, indices, seed):
    """Projective-free syzygies/cosyzygies of T at the requested indices.

    T must already be projective-free; syzygies of a projective-free module
    through minimal covers stay projective-free, and cosyzygies are computed
    through duals of minimal covers.
    """
    lo = min(indices)
    hi = max(indices)
    orbit = {0: T}
    cur = T
    for i in range(1, hi + 1):
        cur = syzygy(cur, seed=seed)[0].rename(f"O^{i}({T.name})")
        orbit[i] = cur
    cur = T
    for i in range(1, -lo + 1):
        cur = cosyzygy(cur, seed=seed).rename(f"O^{-i}({T.name})")
        orbit[-i] = cur
    return {i: orbit[i] for i in indices}


def default_window(M, N):
    """The default detection window for a map M -> N."""
    return M.dim + N.dim + 4


def trivial_family(group, field, window=None, seed=0):
    return TestFamily("trivial", group, field, window=window, seed=seed)


def simples_family(group, field, window=None, seed=0):
    return TestFamily("simples", group, field, window=window, seed=seed)


def strong_family(group, field, window=None, seed=0):
    return TestFamily("strong", group, field, window=window, seed=seed)


def suspension_of_k(group, field, i, seed=0):
    """Omega~^i of the trivial module, through the shared cache."""
    cache = suspension_cache(group, field)
    return cache.omega(i, seed=seed)
