"""Ghost lengths: how many family-ghosts can compose out of a module
before the composite dies stably.

The *length* of M for a test family is the least n such that every
composite of n family-ghosts starting at M is stably trivial.  Lengths are
reported as certified bounds:

- For an exact family (periodic trivial module), a chain of weakly
  universal ghosts computes the length outright: the first vanishing index
  of the composite is the length, because any nonzero n-fold ghost
  composite would factor link-by-link through the universal chain and
  force the universal composite to be nonzero too.
- For a windowed family, upper bounds come from vanishing iterates of
  universal ghosts (valid unconditionally: a true ghost kills whatever
  test maps the window swept, so it factors through the windowed
  evaluation cofiber all the same) or, for the simples family, from the
  radical length (a module built from its radical layers kills any
  composite of that many simple-ghosts).  Lower bounds come from explicit
  chains whose links are certified ghosts; when those certificates are
  in-window the lower bound is flagged as windowed, never silently exact.

Over cyclic p-groups the strong family has a complete structural
algorithm (three cases by how the summand size sits against p^(r-1)),
implemented in stgl_cyclic and used automatically.
"""

import numpy as np

from ..blocks import block_decomposition, block_of, thick_k_equals_B0
from ..errors import Mismatch, NotInThickK, ResourceLimit
from ..ff.matrix import Matrix
from ..modrep.catalogs import jordan_module
from ..modrep.covers import syzygy, cosyzygy
from ..modrep.decompose import decompose, projective_free_part
from ..modrep.structure import loewy_length
from ..stable.stably import is_stably_trivial, stably_isomorphic
from ..stable.triangles import complete_triangle, stable_fiber
from .detect import is_ghost, ghost_class_space
from .families import TestFamily, default_window
from .universal import universal_ghost

UPPER_PROVENANCES = ("closed-form", "vanishing-iterate", "radical-length")

#: Suspension windows tried, in order, for windowed upper-bound iteration.
ITERATION_WINDOWS = (2, 4, 8)

#: Caps for the windowed lower-bound chain search.
SEARCH_WINDOW = 4
SEARCH_DEPTH = 3
SEARCH_BEAM = 6


class LengthBounds:
    """Certified bounds on a ghost length.

    - ``lower``/``upper``: integers (upper may be None when no vanishing
      iterate was found within the configured caps).
    - ``lower_windowed``: True when some link in the lower-bound chain was
      only certified in-window; the bound is then conditional on those
      links being true ghosts.
    - ``upper_provenance``: "closed-form", "vanishing-iterate", or
      "radical-length".
    - ``links``: one record per chain link: dicts with route/verdict/
      source/target entries.
    """

    __slots__ = ("module", "family", "lower", "upper", "lower_windowed",
                 "upper_provenance", "links", "notes")

    def __init__(self, module, family, lower, upper, lower_windowed,
                 upper_provenance, links=None, notes=None):
        if upper_provenance is not None \
                and upper_provenance not in UPPER_PROVENANCES:
            raise Mismatch(f"unknown provenance {upper_provenance!r}")
        if upper is not None and lower > upper:
            raise Mismatch(f"lower bound {lower} exceeds upper {upper}")
        self.module = module
        self.family = family
        self.lower = lower
        self.upper = upper
        self.lower_windowed = lower_windowed
        self.upper_provenance = upper_provenance
        self.links = list(links or [])
        self.notes = list(notes or [])

    @property
    def exact(self):
        return (self.upper is not None and self.lower == self.upper
                and not self.lower_windowed)

    @property
    def value(self):
        """The length when known exactly, else None."""
        return self.lower if self.exact else None

    def __repr__(self):
        if self.exact:
            mid = f"= {self.lower}"
        else:
            up = "?" if self.upper is None else str(self.upper)
            tag = " (windowed)" if self.lower_windowed else ""
            mid = f"in [{self.lower}, {up}]{tag}"
        return (f"LengthBounds({self.module}, {self.family}: {mid})")


def _link_record(route, certificate, source, target, universality_exact):
    return {
        "route": route,
        "verdict": certificate.verdict if certificate else None,
        "exact": certificate.exact if certificate else True,
        "source": source,
        "target": target,
        "universality_exact": universality_exact,
    }


# -- membership in thick(k) --------------------------------------------------


def assert_in_thick_k(M, seed=0):
    """Certify that M lies in the thick subcategory generated by k, or
    raise NotInThickK (also when membership cannot be decided here).

    Decidable cases: over a p-group everything is in thick(k); when the
    principal-block criterion holds (the centralizer of every element of
    order p is p-nilpotent), thick(k) is exactly the principal block, so
    membership reduces to a block computation on the projective-free part.
    """
    group, f = M.group, M.field
    if group.is_p_group(f.p):
        return "p-group: every module lies in thick(k)"
    pf, _ = projective_free_part(M, seed=seed)
    if pf.dim == 0:
        return "stably trivial: lies in thick(k)"
    if not thick_k_equals_B0(group, f):
        raise NotInThickK(
            f"thick(k) over {group.label} is not a block-closed "
            "subcategory here (the principal-block criterion fails), so "
            "membership cannot be certified by this package")
    dec = block_decomposition(group, f, seed=seed)
    b = block_of(pf, dec, seed=seed)
    if b == dec.principal_index:
        return ("principal-block criterion holds and the projective-free "
                "part lies in the principal block")
    raise NotInThickK(
        f"{M.name} has a projective-free summand outside the principal "
        f"block (block {b!r}); it is not in thick(k)")


# -- exact chains ------------------------------------------------------------


def _chain_exact(pf, family, seed, max_len):
    """(length, links) by iterating certified weakly universal ghosts."""
    links = []
    comp = None
    X = pf
    for step in range(1, max_len + 1):
        u = universal_ghost(X, family, seed=seed)
        if not u.universality_exact:
            raise Mismatch("universal ghost lost exact universality on an "
                           "exact family")
        links.append(_link_record(u.route, u.certificate, X.name,
                                  u.target.name, True))
        comp = u.map if comp is None else u.map @ comp
        if comp.nrows == 0 or is_stably_trivial(comp, pf, u.target):
            return step, links
        X = u.target
    raise ResourceLimit(
        f"universal-ghost chain did not vanish within {max_len} steps")


# -- windowed bounds ---------------------------------------------------------


def _upper_by_iteration(pf, family, seed, max_len, windows):
    """Least n with an n-fold windowed-universal-ghost composite stably
    trivial, or None.  Valid as an upper bound regardless of the window:
    every true family-ghost factors through each windowed cofiber."""
    for W in windows:
        small = TestFamily(family.kind, family.group, family.field,
                           window=W, seed=family.seed)
        links = []
        comp = None
        X = pf
        for step in range(1, max_len + 1):
            try:
                u = universal_ghost(X, small, seed=seed)
            except ResourceLimit:
                links = None
                break
            links.append(_link_record(u.route, u.certificate, X.name,
                                      u.target.name, u.universality_exact))
            comp = u.map if comp is None else u.map @ comp
            if comp.nrows == 0 or is_stably_trivial(comp, pf, u.target):
                return step, links, W
            X = u.target
    return None


def _suspension_pool(X, seed):
    """Default targets for the chain search: X and its (co)syzygies."""
    out = [X]
    out.append(syzygy(X, seed=seed)[0].rename(f"O({X.name})"))
    out.append(cosyzygy(X, seed=seed).rename(f"O^-1({X.name})"))
    return [Y for Y in out if Y.dim > 0]


def _lower_by_search(pf, family, seed, pool, max_depth, window, beam):
    """(depth_reached, links): longest found chain of certified (possibly
    in-window) family-ghosts out of pf with stably nontrivial composite.
    A chain of d nonzero links proves length >= d + 1."""
    small = TestFamily(family.kind, family.group, family.field,
                       window=window, seed=family.seed)
    frontier = [(pf, None, [])]   # (module, composite from pf, links)
    best = (0, [])
    for depth in range(1, max_depth + 1):
        nxt = []
        for X, comp, links in frontier:
            targets = pool(X) if callable(pool) else (
                pool if pool is not None else _suspension_pool(X, seed))
            for Y in targets:
                if Y.group is not X.group:
                    continue
                space = ghost_class_space(X, Y, small, seed=seed)
                for r in space["representatives"]:
                    comp2 = r if comp is None else r @ comp
                    if not np.any(comp2.a):
                        continue
                    if is_stably_trivial(comp2, pf, Y):
                        continue
                    link = {
                        "route": "search",
                        "verdict": ("ghost-exact" if space["exact"]
                                    else "ghost-in-window"),
                        "exact": space["exact"],
                        "source": X.name,
                        "target": Y.name,
                        "universality_exact": False,
                    }
                    nxt.append((Y, comp2, links + [link]))
        if not nxt:
            break
        best = (depth, nxt[0][2])
        frontier = nxt[:beam]
    return best


def verify_ghost_chain(chain, family, seed=0):
    """Certify a user-supplied chain of maps as composable family-ghosts
    with stably nontrivial composite.

    ``chain`` is a list of (phi, source, target) triples, composable in
    order.  Returns a dict with per-link certificates, the composite
    verdict, and the implied lower bound for the first module's length
    (number of nonzero-composing links + 1), flagged windowed when any
    link certificate is in-window.
    """
    if not chain:
        raise Mismatch("empty chain")
    if isinstance(family, str):
        family = TestFamily(family, chain[0][1].group, chain[0][1].field,
                            seed=seed)
    certs = []
    for i, (phi, src, tgt) in enumerate(chain):
        if i > 0 and src is not chain[i - 1][2]:
            raise Mismatch(f"chain link {i} does not start where link "
                           f"{i - 1} ends")
        certs.append(is_ghost(phi, src, tgt, family, seed=seed))
    start = chain[0][1]
    comp = chain[0][0]
    for phi, _s, _t in chain[1:]:
        comp = phi @ comp
    end = chain[-1][2]
    nonzero = not is_stably_trivial(comp, start, end)
    all_ghosts = all(c.holds for c in certs)
    windowed = any(c.verdict == "ghost-in-window" for c in certs)
    return {
        "links": certs,
        "all_ghosts": all_ghosts,
        "composite_stably_nonzero": nonzero,
        "lower_bound": (len(chain) + 1) if (nonzero and all_ghosts) else None,
        "windowed": windowed,
    }


# -- the strong family over cyclic p-groups ----------------------------------


def _cyclic_p_group_data(group, p):
    if not group.is_p_group(p):
        return None
    gen = None
    for g in range(group.order):
        if group.element_order(g) == group.order:
            gen = g
            break
    if gen is None:
        return None
    return gen


def stgl_cyclic(M, seed=0):
    """Exact strong-family length over a cyclic p-group, fully certified.

    Per indecomposable summand M_n (Jordan block of size n) with
    N = min(n, p^r - n) and c = p^(r-1):

    - N divides p^r: M_n is stably a suspension of an induced trivial
      module, so its length is 1 (0 when projective).
    - N < c (and N does not divide p^r): length 2.  Lower: the evaluation
      cofiber out of M_n is a certified strong ghost and stably nontrivial.
      Upper: the cofiber of (g-1)^N on M_c decomposes into the summands of
      dimensions {N, p^r - N}; M_n sits in a triangle with both ends
      induced-trivial, so two strong ghosts always die on it.
    - N > c: length = ceil(N / c), through the chain of (g-1)^c links.
      Each link is a certified strong ghost, the composite (g-1)^(mc)
      first dies stably at m = ceil(N/c) (lower bound), and (g-1)^c is
      weakly universal for strong ghosts because its fiber is stably a sum
      of suspensions of induced trivial modules (verified by decomposing
      the fiber), which every strong ghost kills (upper bound).

    The length of a direct sum is the max over the summands.
    """
    group, f = M.group, M.field
    p = f.p
    if _cyclic_p_group_data(group, p) is None:
        raise Mismatch("stgl_cyclic needs a cyclic p-group")
    pr = group.order
    c = pr // p
    family = TestFamily("strong", group, f, seed=seed)
    if not family.exact:
        raise Mismatch("cyclic p-group should have a periodic trivial "
                       "module")
    pf, _ = projective_free_part(M, seed=seed)
    if pf.dim == 0:
        return LengthBounds(M.name, "strong", 0, 0, False, "closed-form",
                            notes=["stably trivial module"])
    parts = decompose(pf, seed=seed)
    best = 0
    best_links = []
    best_notes = []
    for s in parts:
        n = s.module.dim
        val, links, notes = _stgl_cyclic_part(group, f, family, n, pr, c,
                                              seed)
        if val > best:
            best, best_links, best_notes = val, links, notes
    notes = [f"direct-sum length = max over {len(parts)} indecomposable "
             "summand(s)"] + best_notes
    return LengthBounds(M.name, "strong", best, best, False, "closed-form",
                        links=best_links, notes=notes)


def _stgl_cyclic_part(group, f, family, n, pr, c, seed):
    """(value, links, notes) for one Jordan summand M_n."""
    N = min(n, pr - n)
    Mn = jordan_module(group, f, n)
    if N == 0:
        return 0, [], [f"M_{n} is projective"]
    gen = _cyclic_p_group_data(group, f.p)
    gm1 = Mn.action(gen) - Matrix.identity(f, Mn.dim)

    if pr % N == 0:
        u = universal_ghost(Mn, family, seed=seed)
        if u.route not in ("suspension-detects", "zero"):
            raise Mismatch(
                f"M_{n} should be detected as stably induced (N = {N} "
                f"divides {pr}), got route {u.route}")
        links = [_link_record(u.route, u.certificate, Mn.name,
                              u.target.name, True)]
        return 1, links, [
            f"M_{n}: N = {N} divides {pr}, so M_{n} is stably a "
            "suspension of an induced trivial module; one strong ghost "
            "kills everything out of it"]

    if N < c:
        # lower bound: a certified stably nontrivial strong ghost
        u = universal_ghost(Mn, family, seed=seed)
        if not u.certificate.exact:
            raise Mismatch("strong family over a cyclic group must "
                           "certify exactly")
        if u.map.nrows != 0 and is_stably_trivial(u.map, Mn, u.target):
            raise Mismatch(f"universal strong ghost out of M_{n} is "
                           "stably trivial, contradicting N not dividing "
                           "p^r")
        # upper bound: cofiber of (g-1)^N on M_c decomposes as {N, pr-N}
        Mc = jordan_module(group, f, c)
        phiN = (Mc.action(gen) - Matrix.identity(f, Mc.dim)).pow(N)
        tri = complete_triangle(phiN, Mc, Mc)
        cof_pf, _ = projective_free_part(tri.cofiber, seed=seed)
        dims = sorted(s.module.dim for s in decompose(cof_pf, seed=seed))
        if dims != sorted({N, pr - N}):
            raise Mismatch(
                f"cofiber of (g-1)^{N} on M_{c} decomposed into dims "
                f"{dims}, expected {sorted({N, pr - N})}")
        links = [
            _link_record(u.route, u.certificate, Mn.name, u.target.name,
                         True),
            {"route": "triangle-extension", "verdict": "ghost-exact",
             "exact": True, "source": f"M_{c}", "target": f"M_{c}",
             "universality_exact": True},
        ]
        return 2, links, [
            f"M_{n}: N = {N} < {c} and N does not divide {pr}: the "
            f"evaluation cofiber is a stably nontrivial strong ghost "
            f"(length >= 2), and M_{n} is a summand of the cofiber of "
            f"(g-1)^{N} on M_{c} whose triangle has induced-trivial ends "
            "(length <= 2)"]

    # N > c: chain of (g-1)^c links, m = ceil(N / c)
    m = -(-N // c)
    phic = gm1.pow(c)
    cert = is_ghost(phic, Mn, Mn, family, seed=seed)
    if not (cert.holds and cert.exact):
        raise Mismatch(f"(g-1)^{c} on M_{n} failed strong-ghost "
                       "certification")
    # weak universality: the fiber of (g-1)^c is stably a sum of
    # suspensions of induced trivial modules (every strong ghost kills it,
    # so every strong ghost factors through (g-1)^c)
    F, _tri = stable_fiber(phic, Mn, Mn, seed=seed)
    fiber_ok = True
    for s in decompose(F, seed=seed):
        dN = min(s.module.dim, pr - s.module.dim)
        if dN != 0 and pr % dN != 0:
            fiber_ok = False
    if not fiber_ok:
        raise Mismatch(f"fiber of (g-1)^{c} on M_{n} has a summand "
                       "outside the induced-trivial classes")
    comp_prev = gm1.pow((m - 1) * c)
    if m > 1 and is_stably_trivial(comp_prev, Mn, Mn):
        raise Mismatch(f"(g-1)^{(m - 1) * c} on M_{n} vanished early")
    comp = gm1.pow(m * c)
    if not is_stably_trivial(comp, Mn, Mn):
        raise Mismatch(f"(g-1)^{m * c} on M_{n} did not vanish")
    links = [_link_record("cyclic-generator-power", cert, Mn.name, Mn.name,
                          True)] * m
    return m, links, [
        f"M_{n}: N = {N} > {c}: chain of (g-1)^{c} strong ghosts; "
        f"composite first vanishes stably at m = {m} = ceil({N}/{c}); "
        "each link is weakly universal (its fiber decomposes into "
        "induced-trivial classes, verified)"]


# -- the public entry point --------------------------------------------------


def length(M, family, seed=0, max_len=64, iteration_windows=None,
           search_pool=None, search_depth=None, search_window=None,
           search_beam=None):
    """Certified LengthBounds for M against a test family.

    For the trivial family, M must verifiably lie in thick(k)
    (NotInThickK otherwise).  Exact families are resolved by universal-
    ghost chains; windowed families get a vanishing-iterate or radical-
    length upper bound and a chain-search lower bound with flagged links.
    """
    if isinstance(family, str):
        family = TestFamily(family, M.group, M.field, seed=seed)
    if family.group is not M.group:
        raise Mismatch("family is over a different group")
    notes = []
    if family.kind == "trivial":
        notes.append(assert_in_thick_k(M, seed=seed))

    pf, _ = projective_free_part(M, seed=seed)
    if pf.dim == 0:
        return LengthBounds(M.name, family.kind, 0, 0, False,
                            "closed-form",
                            notes=notes + ["stably trivial module"])

    if family.kind == "strong" \
            and _cyclic_p_group_data(M.group, M.field.p) is not None:
        res = stgl_cyclic(M, seed=seed)
        res.notes.extend(notes)
        return res

    if family.exact:
        n, links = _chain_exact(pf, family, seed, max_len)
        notes.append(
            f"exact chain: composite of weakly universal ghosts first "
            f"vanishes stably at step {n}")
        return LengthBounds(M.name, family.kind, n, n, False,
                            "vanishing-iterate", links=links, notes=notes)

    # windowed family: bounds
    windows = iteration_windows if iteration_windows is not None \
        else ITERATION_WINDOWS
    upper = None
    upper_prov = None
    upper_links = []
    hit = _upper_by_iteration(pf, family, seed, max_len, windows)
    if hit is not None:
        upper, upper_links, used_w = hit
        upper_prov = "vanishing-iterate"
        notes.append(
            f"upper bound {upper}: iterate of windowed universal ghosts "
            f"(window {used_w}) vanished; valid unconditionally since "
            "every true ghost factors through each windowed cofiber")
    if family.kind == "simples":
        ll = loewy_length(pf, seed=seed)
        if upper is None or ll < upper:
            upper = ll
            upper_prov = "radical-length"
            upper_links = []
            notes.append(
                f"upper bound {ll}: the radical filtration presents the "
                "module in that many semisimple layers, and each "
                "simple-ghost kills one layer's worth of maps")

    depth_cap = search_depth if search_depth is not None else SEARCH_DEPTH
    if upper is not None:
        depth_cap = min(depth_cap, upper - 1)
    win = search_window if search_window is not None else SEARCH_WINDOW
    beam = search_beam if search_beam is not None else SEARCH_BEAM
    lower, low_links = 1, []
    if depth_cap > 0:
        d, low_links = _lower_by_search(pf, family, seed, search_pool,
                                        depth_cap, win, beam)
        lower = 1 + d
    lower_windowed = any(not lk["exact"] for lk in low_links)
    if lower > 1:
        notes.append(
            f"lower bound {lower}: explicit chain of {lower - 1} "
            "certified ghost(s) with stably nontrivial composite"
            + (" (links certified in-window)" if lower_windowed else ""))
    return LengthBounds(M.name, family.kind, lower, upper, lower_windowed,
                        upper_prov, links=upper_links + low_links,
                        notes=notes)


def ghost_length(M, seed=0, **kw):
    """Length against the trivial family (suspensions of k)."""
    return length(M, "trivial", seed=seed, **kw)


def simple_ghost_length(M, seed=0, **kw):
    """Length against the simples family."""
    return length(M, "simples", seed=seed, **kw)


def strong_ghost_length(M, seed=0, **kw):
    """Length against the strong (induced-trivial) family."""
    return length(M, "strong", seed=seed, **kw)
