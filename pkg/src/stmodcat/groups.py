"""Finite groups as explicit multiplication tables.

A `Group` stores its full multiplication table (`table[i, j]` = index of the
product g_i * g_j), with the identity always at index 0, plus a named set of
generators.  Everything downstream (module actions, Sylow theory, double
cosets) works from the table, so group constructors only need to produce a
consistent table and a generating set.

Supported constructors cover the case-study zoo: cyclic groups, dihedral
groups, the alternating group on four letters, SL(2, p) for small p, and
direct products; the `build_group` mini-language parses labels like
"C8", "D12", "A4", "SL2_3", "C4xC3" (case-insensitive).
"""

import re
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import BadSpec, OrderTooLarge, UnknownSpec

MAX_ORDER = 400


class Group:
    def __init__(self, label, table, gens, element_names):
        table = np.asarray(table, dtype=np.int16)
        n = table.shape[0]
        if n > MAX_ORDER:
            raise OrderTooLarge(f"group order {n} exceeds {MAX_ORDER}")
        self.label = label
        self.table = table
        self.order = n
        self.gens = dict(gens)  # name -> element index (insertion-ordered)
        self.element_names = list(element_names)
        inv = np.zeros(n, dtype=np.int16)
        for i in range(n):
            row = np.nonzero(table[i] == 0)[0]
            inv[i] = row[0]
        self.inv = inv
        self._validate()
        self._subgroups = None
        self._word_tree = None

    def _validate(self):
        n = self.order
        t = self.table
        assert np.array_equal(t[0], np.arange(n)), "identity must be index 0"
        assert np.array_equal(t[:, 0], np.arange(n)), "identity must be index 0"
        # each row/column is a permutation
        srt = np.sort(t, axis=1)
        assert np.array_equal(srt, np.tile(np.arange(n), (n, 1))), "bad table"
        # generators generate
        assert len(self.closure(list(self.gens.values()))) == n, \
            "declared generators do not generate the group"

    # -- basic operations

    def mul(self, i, j):
        return int(self.table[i, j])

    def inverse(self, i):
        return int(self.inv[i])

    def conjugate(self, g, h):
        """g h g^-1."""
        return int(self.table[self.table[g, h], self.inv[g]])

    def element_order(self, g):
        x, n = g, 1
        while x != 0:
            x = int(self.table[x, g])
            n += 1
        return n

    def compose(self, word):
        """Product of generator powers: word = [(gen_name, exponent), ...]."""
        e = 0
        for name, k in word:
            g = self.gens[name]
            if k < 0:
                g = self.inverse(g)
                k = -k
            for _ in range(k):
                e = int(self.table[e, g])
        return e

    def closure(self, gens):
        seen = bytearray(self.order)
        seen[0] = 1
        out = [0]
        frontier = [0]
        gens = list(gens)
        while frontier:
            new = []
            for h in frontier:
                for g in gens:
                    e = int(self.table[g, h])
                    if not seen[e]:
                        seen[e] = 1
                        out.append(e)
                        new.append(e)
            frontier = new
        return sorted(out)

    def word_tree(self):
        """BFS parents for writing each element as a word in the generators.

        Returns (parent, gen_name) arrays: element e = gen * parent for e != 0.
        """
        if self._word_tree is not None:
            return self._word_tree
        parent = [-1] * self.order
        via = [None] * self.order
        parent[0] = 0
        frontier = [0]
        while frontier:
            new = []
            for h in frontier:
                for name, g in self.gens.items():
                    e = int(self.table[g, h])
                    if parent[e] == -1:
                        parent[e] = h
                        via[e] = name
                        new.append(e)
            frontier = new
        self._word_tree = (parent, via)
        return self._word_tree

    # -- structural queries

    def conjugacy_classes(self):
        """Element conjugacy classes, each a sorted tuple, identity first."""
        seen = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            cls = {self.conjugate(s, g) for s in range(self.order)}
            seen |= cls
            classes.append(tuple(sorted(cls)))
        return classes

    def center(self):
        t = self.table
        return [g for g in range(self.order)
                if np.array_equal(t[g, :], t[:, g])]

    def is_abelian(self):
        return np.array_equal(self.table, self.table.T)

    def p_part(self, p):
        n, a = self.order, 0
        while n % p == 0:
            n //= p
            a += 1
        return p ** a

    def is_p_group(self, p):
        return self.p_part(p) == self.order

    def p_regular_elements(self, p):
        """Elements of order coprime to p (the identity counts)."""
        return [g for g in range(self.order) if self.element_order(g) % p != 0]

    def p_power_elements(self, p):
        """Elements whose order is a power of p (the identity counts)."""
        out = []
        for g in range(self.order):
            o = self.element_order(g)
            while o % p == 0:
                o //= p
            if o == 1:
                out.append(g)
        return out

    def p_singular_elements(self, p):
        """Elements of order divisible by p, plus the identity."""
        return [0] + [g for g in range(1, self.order)
                      if self.element_order(g) % p == 0]

    def is_p_nilpotent(self, p):
        """True iff the p-regular elements form a (normal) subgroup."""
        reg = self.p_regular_elements(p)
        regset = set(reg)
        return all(int(self.table[a, b]) in regset for a in reg for b in reg)

    def sylow(self, p):
        """A Sylow p-subgroup, grown inside successive normalizers."""
        target = self.p_part(p)
        P = [0]
        gens = []
        while len(P) < target:
            N = self.normalizer(P)
            Pset = set(P)
            grown = False
            for g in N:
                if g in Pset:
                    continue
                o = self.element_order(g)
                while o % p == 0:
                    o //= p
                if o != 1:
                    continue
                K = self.closure(gens + [g])
                # accept only if the result is a p-group
                m = len(K)
                while m % p == 0:
                    m //= p
                if m == 1:
                    P = K
                    gens = gens + [g]
                    grown = True
                    break
            assert grown, "Sylow growth failed (impossible for correct tables)"
        return P

    def normalizer(self, H):
        Hset = frozenset(H)
        out = []
        for g in range(self.order):
            if all(self.conjugate(g, h) in Hset for h in H):
                out.append(g)
        return out

    def centralizer_of_element(self, x):
        t = self.table
        return [g for g in range(self.order) if t[g, x] == t[x, g]]

    def is_normal(self, H):
        return len(self.normalizer(H)) == self.order

    def conjugate_subgroup(self, g, H):
        return tuple(sorted(self.conjugate(g, h) for h in H))

    def subgroups(self):
        """All subgroups, each a sorted tuple of element indices."""
        if self._subgroups is not None:
            return self._subgroups
        cyclics = {tuple(self.closure([g])) for g in range(self.order)}
        subs = set(cyclics)
        frontier = set(cyclics)
        while frontier:
            new = set()
            for H in frontier:
                for C in cyclics:
                    if set(C) <= set(H):
                        continue
                    K = tuple(self.closure(list(H) + list(C)))
                    if K not in subs:
                        subs.add(K)
                        new.add(K)
            frontier = new
        self._subgroups = sorted(subs, key=lambda s: (len(s), s))
        return self._subgroups

    def subgroup_conjugacy_representatives(self):
        """One representative per conjugacy class of subgroups."""
        subs = self.subgroups()
        seen = set()
        reps = []
        for H in subs:
            if H in seen:
                continue
            reps.append(H)
            for g in range(self.order):
                seen.add(self.conjugate_subgroup(g, H))
        return reps

    def double_cosets(self, L, H):
        """Representatives of L\\G/H, smallest element first per coset."""
        unseen = set(range(self.order))
        reps = []
        while unseen:
            s = min(unseen)
            coset = set()
            for a in L:
                sa = int(self.table[a, s])
                for b in H:
                    coset.add(int(self.table[sa, b]))
            unseen -= coset
            reps.append(s)
        return reps

    def as_subgroup(self, elements, label=None):
        """(Group, embedding) for the subgroup on the given elements.

        The embedding maps new indices to parent indices; new index 0 is the
        identity.  Generator names are sub0, sub1, ... for a greedily-chosen
        generating set.
        """
        elements = sorted(set(elements))
        assert elements[0] == 0, "subgroups must contain the identity"
        pos = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        table = np.zeros((n, n), dtype=np.int16)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                prod = int(self.table[a, b])
                assert prod in pos, "element set is not closed"
                table[i, j] = pos[prod]
        gens = {}
        current = [0]
        for e in elements:
            if e not in current:
                gens[f"sub{len(gens)}"] = pos[e]
                current = [elements[i] for i in
                           Group._raw_closure(table, list(gens.values()))]
        if not gens:  # trivial subgroup
            gens = {"sub0": 0}
        names = [self.element_names[e] for e in elements]
        sub = Group(label or f"{self.label}<sub{n}>", table, gens, names)
        return sub, elements

    @staticmethod
    def _raw_closure(table, gens):
        n = table.shape[0]
        seen = bytearray(n)
        seen[0] = 1
        out = [0]
        frontier = [0]
        while frontier:
            new = []
            for h in frontier:
                for g in gens:
                    e = int(table[g, h])
                    if not seen[e]:
                        seen[e] = 1
                        out.append(e)
                        new.append(e)
            frontier = new
        return sorted(out)

    def __repr__(self):
        return f"Group({self.label}, order {self.order})"


# ----------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------

def cyclic(n):
    if n < 1:
        raise BadSpec(f"cyclic group order must be positive, got {n}")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return Group(f"C{n}", table, {"g": 1 % n}, names)


def dihedral(order):
    """Dihedral group of the given (even, >= 2) order: <x, y | x^n, y^2, ...>."""
    if order % 2 != 0 or order < 2:
        raise BadSpec(f"dihedral group order must be even >= 2, got {order}")
    n = order // 2
    # element (i, e) = x^i y^e  ->  index i + n*e
    table = np.zeros((order, order), dtype=np.int16)
    for i in range(n):
        for e in (0, 1):
            for j in range(n):
                for f_ in (0, 1):
                    if e == 0:
                        k, g = (i + j) % n, f_
                    else:
                        k, g = (i - j) % n, 1 - f_
                    table[i + n * e, j + n * f_] = k + n * g
    names = []
    for e in (0, 1):
        for i in range(n):
            if i == 0:
                names.append("y" if e else "1")
            else:
                xi = "x" if i == 1 else f"x^{i}"
                names.append(f"{xi}*y" if e else xi)
    return Group(f"D{order}", table, {"x": 1 % n, "y": n}, names)


def alternating4():
    elems = []
    for perm in permutations(range(4)):
        inversions = sum(1 for a in range(4) for b in range(a + 1, 4)
                         if perm[a] > perm[b])
        if inversions % 2 == 0:
            elems.append(perm)
    ident = (0, 1, 2, 3)
    elems.sort()
    elems.remove(ident)
    elems.insert(0, ident)
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int16)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = pos[tuple(a[b[k]] for k in range(4))]

    def cycles(perm):
        seen, parts = set(), []
        for s in range(4):
            if s in seen or perm[s] == s:
                continue
            cyc, x = [s], perm[s]
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = perm[x]
            seen.add(s)
            parts.append("(" + " ".join(str(v + 1) for v in cyc) + ")")
        return "".join(parts) or "1"

    t = pos[(1, 0, 3, 2)]      # (12)(34)
    c = pos[(1, 2, 0, 3)]      # (123)
    return Group("A4", table, {"t": t, "c": c}, [cycles(e) for e in elems])


def sl2(p, allow_large=False):
    if p not in (2, 3, 5, 7):
        raise BadSpec(f"SL(2, p) supported for p in {{2, 3, 5, 7}}, got {p}")
    if p == 7 and not allow_large:
        raise OrderTooLarge("SL(2, 7) has order 336; pass allow_large=True")
    elems = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        elems.append((a, b, c, d))
    ident = (1, 0, 0, 1)
    elems.sort()
    elems.remove(ident)
    elems.insert(0, ident)
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int16)
    for i, (a, b, c, d) in enumerate(elems):
        for j, (e, f_, g, h) in enumerate(elems):
            prod = ((a * e + b * g) % p, (a * f_ + b * h) % p,
                    (c * e + d * g) % p, (c * f_ + d * h) % p)
            table[i, j] = pos[prod]
    names = [f"[[{a},{b}],[{c},{d}]]" for (a, b, c, d) in elems]
    gens = {"a": pos[(1, 1, 0, 1)], "b": pos[(1, 0, 1, 1)]}
    return Group(f"SL2_{p}", table, gens, names)


def direct_product(*groups):
    if len(groups) == 1:
        return groups[0]
    if len(groups) > 2:
        return direct_product(direct_product(*groups[:-1]), groups[-1])
    A, B = groups
    n = A.order * B.order
    if n > MAX_ORDER:
        raise OrderTooLarge(f"direct product order {n} exceeds {MAX_ORDER}")
    idx = lambda i, j: i * B.order + j
    table = np.zeros((n, n), dtype=np.int16)
    for i1 in range(A.order):
        for j1 in range(B.order):
            for i2 in range(A.order):
                for j2 in range(B.order):
                    table[idx(i1, j1), idx(i2, j2)] = idx(
                        int(A.table[i1, i2]), int(B.table[j1, j2]))
    gens = {}
    for name, g in A.gens.items():
        gens[f"{name}1"] = idx(g, 0)
    for name, g in B.gens.items():
        gens[f"{name}2"] = idx(0, g)
    names = [f"({A.element_names[i]},{B.element_names[j]})"
             for i in range(A.order) for j in range(B.order)]
    return Group(f"{A.label}x{B.label}", table, gens, names)


@lru_cache(maxsize=None)
def build_group(spec, allow_large=False):
    """Parse the group mini-language: C8, D12, A4, SL2_3, C4xC3, ..."""
    s = spec.strip().lower()
    if "x" in s and not s.startswith("sl"):
        parts = s.split("x")
        return direct_product(*[build_group(p, allow_large) for p in parts])
    m = re.match(r"^c(\d+)$", s)
    if m:
        return cyclic(int(m.group(1)))
    m = re.match(r"^d(\d+)$", s)
    if m:
        return dihedral(int(m.group(1)))
    if s == "a4":
        return alternating4()
    if s in ("v", "v4"):
        return direct_product(cyclic(2), cyclic(2))
    m = re.match(r"^sl2_(\d+)$", s)
    if m:
        return sl2(int(m.group(1)), allow_large=allow_large)
    raise UnknownSpec(f"unrecognized group spec {spec!r}")
