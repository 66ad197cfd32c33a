"""Weakly universal ghosts.

A *weakly universal ghost* out of M is a single family-ghost Phi: M -> M'
such that every family-ghost out of M factors through Phi in the stable
category.  Chains of weakly universal ghosts compute ghost lengths: the
composite Phi_n ... Phi_1 is stably trivial exactly when n reaches the
ghost length of M (if some length-n composite of ghosts out of M were
nonzero, factoring each link through the universal one would make the
universal composite nonzero too).

Four construction routes, picked per (group, family, module):

- "zero": M is stably trivial; the zero map out of it is vacuously
  weakly universal.
- "suspension-detects": M is stably isomorphic to a test object T of the
  family.  Any family-ghost f out of M composes to zero with the stable
  isomorphism T -> M, hence is itself stably trivial; the zero map
  M -> 0 is weakly universal.
- "cyclic-generator": over a cyclic p-group, multiplication by (g - 1)
  (g a generator) is a weakly universal ghost on every module: it is
  central in the group algebra, ghosts out of an indecomposable M_n are
  exactly the classes factoring through (g-1)M_n, and the property passes
  to direct sums blockwise.
- "socle-shift": over a group with a cyclic normal Sylow p-subgroup and a
  uniserial nonprojective M, the composite
      M ->> M/soc(M) ~= rad(M (x) W*) >-> M (x) W*
  where W is the one-dimensional conjugation-weight module of the Sylow
  generator.  Tensoring with W* shifts each simple to the one below it in
  the principal-block tower, which makes the middle isomorphism exist and
  the composite kill every map from a simple up to suspension.
- "evaluation-cofiber": generically, the cofiber of the total evaluation
  map (direct sum over test objects T and stable classes T -> M) -> M.
  Every family-ghost kills the evaluation, so it factors through the
  cofiber inclusion; for windowed families the cofiber map dominates all
  true ghosts as well, so chains built from it still give valid upper
  bounds for lengths (only its own ghost certificate is windowed).

Every constructed map is certified by detect.is_ghost before it is
returned; a failed certification is a hard error.
"""

import numpy as np

from ..errors import Mismatch, ResourceLimit
from ..ff.matrix import Matrix
from ..modrep.decompose import projective_free_part
from ..modrep.module import Module
from ..modrep.structure import (find_isomorphism, is_projective,
                                loewy_length, radical, radical_series,
                                socle)
from ..stable.stably import stable_hom, stably_isomorphic
from ..stable.triangles import complete_triangle
from .families import TestFamily, default_window
from .detect import is_ghost

ROUTES = ("zero", "suspension-detects", "cyclic-generator", "socle-shift",
          "evaluation-cofiber", "identity")

#: Default cap on the total dimension of the evaluation source module.
EVALUATION_BUDGET = 4096


class UniversalGhost:
    """A weakly universal family-ghost out of a module.

    - ``map``: the matrix of Phi: source -> target,
    - ``route``: which construction produced it,
    - ``certificate``: the GhostCertificate for Phi itself,
    - ``universality_exact``: True when "every family-ghost out of M
      factors through Phi" holds unconditionally.  This is independent of
      the certificate's window: a windowed evaluation cofiber still
      dominates every true ghost, so chains of these maps give valid
      upper bounds either way.
    """

    __slots__ = ("map", "source", "target", "route", "certificate",
                 "universality_exact", "notes")

    def __init__(self, map_, source, target, route, certificate,
                 universality_exact, notes=None):
        if route not in ROUTES:
            raise Mismatch(f"unknown universal-ghost route {route!r}")
        self.map = map_
        self.source = source
        self.target = target
        self.route = route
        self.certificate = certificate
        self.universality_exact = universality_exact
        self.notes = list(notes or [])

    def __repr__(self):
        return (f"UniversalGhost({self.source.name} -> {self.target.name}, "
                f"route={self.route})")


def universal_ghost(M, family, seed=0, budget=EVALUATION_BUDGET):
    """A weakly universal family-ghost out of M, certified."""
    if isinstance(family, str):
        family = TestFamily(family, M.group, M.field, seed=seed)
    f = M.field
    group = M.group

    pf, _info = projective_free_part(M, seed=seed)
    if pf.dim == 0:
        zero_target = Module.zero(group, f)
        phi = Matrix.zeros(f, 0, M.dim)
        cert = is_ghost(phi, M, zero_target, family, seed=seed)
        return UniversalGhost(
            phi, M, zero_target, "zero", cert, True,
            ["module is stably trivial; the zero map is vacuously "
             "weakly universal"])

    if family.kind in ("trivial", "simples") and _is_cyclic_p_group(group, f.p):
        gen = _cyclic_generator(group)
        phi = M.action(gen) - Matrix.identity(f, M.dim)
        cert = is_ghost(phi, M, M, family, seed=seed)
        if not cert.holds:
            raise Mismatch("(g-1) failed its ghost certification")
        return UniversalGhost(
            phi, M, M, "cyclic-generator", cert, True,
            ["(g - 1) is central, kills every map from a suspension of k "
             "up to stable triviality, and every ghost out of an "
             "indecomposable factors through it (blockwise on sums)"])

    hit = _detecting_test_object(M, family, seed)
    if hit is not None:
        zero_target = Module.zero(group, f)
        phi = Matrix.zeros(f, 0, M.dim)
        cert = is_ghost(phi, M, zero_target, family, seed=seed)
        return UniversalGhost(
            phi, M, zero_target, "suspension-detects", cert, True,
            [f"M is stably isomorphic to the test object {hit}; composing "
             "a ghost with that stable isomorphism shows every family-"
             "ghost out of M is stably trivial"])

    if family.kind in ("trivial", "simples"):
        shift = _socle_shift(M, family, seed)
        if shift is not None:
            phi, target, notes = shift
            cert = is_ghost(phi, M, target, family, seed=seed)
            if not cert.holds:
                raise Mismatch("socle-shift map failed its ghost "
                               "certification")
            return UniversalGhost(phi, M, target, "socle-shift", cert,
                                  True, notes)

    return _evaluation_cofiber(M, family, seed, budget)


# -- route helpers ---------------------------------------------------------


def _is_cyclic_p_group(group, p):
    if not group.is_p_group(p):
        return False
    return any(group.element_order(g) == group.order
               for g in range(group.order))


def _cyclic_generator(group):
    for g in range(group.order):
        if group.element_order(g) == group.order:
            return g
    raise Mismatch("no generator found")


def _detecting_test_object(M, family, seed):
    """Label of a test object stably isomorphic to M, or None."""
    pf_dim = projective_free_part(M, seed=seed)[0].dim
    W = family.window if family.window is not None else default_window(M, M)
    for tob in family.test_objects(W):
        if tob.module.dim != pf_dim:
            continue
        ok, _w = stably_isomorphic(M, tob.module, seed=seed)
        if ok:
            return tob.label
    return None


def conjugation_weight_module(group, field, p=None, name="W"):
    """The one-dimensional module g -> (conjugation exponent on the Sylow
    generator) mod p, for a cyclic normal Sylow p-subgroup P = <x>:
    g x g^{-1} = x^{alpha(g)} defines alpha, and W carries g -> alpha(g).

    Its inverse character W* shifts the principal-block simples one step
    down the tower of radical layers of the projective cover of k.
    """
    f = field
    if p is None:
        p = f.p
    syl = group.sylow(p)
    if not group.is_normal(syl):
        raise Mismatch("Sylow subgroup is not normal")
    x = max(syl, key=group.element_order)
    if group.element_order(x) != len(syl):
        raise Mismatch("Sylow subgroup is not cyclic")
    powers = {}
    cur = 0
    for e in range(len(syl)):
        powers[cur] = e
        cur = group.mul(cur, x)
    scalars = {}
    for gname, gi in group.gens.items():
        conj = group.conjugate(gi, x)
        alpha = powers.get(conj)
        if alpha is None:
            raise Mismatch("conjugation does not preserve the Sylow "
                           "subgroup")
        scalars[gname] = alpha % p
    return Module.one_dimensional(group, f, scalars, name=name)


def _is_uniserial(M, seed):
    """Does M have a unique composition series (each radical layer simple)?"""
    if M.dim == 0:
        return False
    series = radical_series(M, seed=seed)
    if len(series) < 2:
        return False
    for upper, lower in zip(series, series[1:]):
        if _layer_module(M, upper, lower, seed) is None:
            return False
    return True


def _layer_module(M, upper_rows, lower_rows, seed):
    """rad^i(M)/rad^(i+1)(M) as a module, or None when not simple."""
    from ..modrep.decompose import decompose
    sub, B = M.submodule(upper_rows)
    if lower_rows.nrows == 0:
        layer = sub
    else:
        # rewrite the lower basis in the coordinates of the upper module
        sol = B.transpose().solve_right(lower_rows.transpose())
        if sol is None:
            raise Mismatch("radical series is not nested")
        layer, _proj = sub.quotient(sol.transpose())
    if layer.dim == 0:
        return None
    parts = decompose(layer, seed=seed)
    if len(parts) != 1:
        return None
    if radical(layer, seed=seed).nrows != 0:
        return None
    return layer


def _socle_shift(M, family, seed):
    """(phi, target, notes) for the socle-shift route, or None if the
    hypotheses (cyclic normal Sylow, M uniserial nonprojective of radical
    length >= 2) do not hold or the middle isomorphism does not exist."""
    group, f = M.group, M.field
    p = f.p
    syl = group.sylow(p)
    if not group.is_normal(syl):
        return None
    x = max(syl, key=group.element_order)
    if group.element_order(x) != len(syl):
        return None
    if is_projective(M) or loewy_length(M, seed=seed) < 2:
        return None
    if not _is_uniserial(M, seed):
        return None
    W = conjugation_weight_module(group, f, p=p)
    Wdual = W.dual(name="W*")
    T = M.tensor(Wdual, name=f"({M.name} (x) W*)")
    soc_rows = socle(M, seed=seed)
    Q, proj = M.quotient(soc_rows, name=f"{M.name}/soc")
    rad_rows = radical(T, seed=seed)
    R, B = T.submodule(rad_rows, name=f"rad({T.name})")
    if R.dim != Q.dim:
        return None
    iso = find_isomorphism(Q, R, seed=seed)
    if iso is None:
        return None
    incl = B.transpose()
    phi = incl @ iso @ proj
    notes = [
        "uniserial source over a cyclic normal Sylow subgroup: the map "
        "factors M ->> M/soc ~= rad(M (x) W*) >-> M (x) W*; it kills the "
        "socle and lands in the radical, so every composite from a "
        "suspension of a simple dies stably",
    ]
    return phi, T, notes


def _evaluation_cofiber(M, family, seed, budget):
    """Cofiber of the total evaluation map of the family into M."""
    f = M.field
    W = family.window if family.window is not None else default_window(M, M)
    pieces = []   # (module, map) pairs
    total = 0
    for tob in family.test_objects(W):
        sh = stable_hom(tob.module, M, seed=seed)
        for g in sh.representatives:
            total += tob.module.dim
            if total > budget:
                raise ResourceLimit(
                    f"evaluation source exceeds the budget ({total} > "
                    f"{budget} dims); raise the budget or use a chain "
                    "search instead")
            pieces.append((tob.module, g))
    if not pieces:
        phi = Matrix.identity(f, M.dim)
        cert = is_ghost(phi, M, M, family, seed=seed)
        return UniversalGhost(
            phi, M, M, "identity", cert, family.exact,
            ["no stable maps from any test object reach M, so every map "
             "out of M is vacuously a family ghost and the identity is "
             "weakly universal"])
    mods = [T for T, _g in pieces]
    E = mods[0] if len(mods) == 1 else mods[0].direct_sum(*mods[1:])
    ev = Matrix(f, np.concatenate([g.a for _T, g in pieces], axis=1))
    tri = complete_triangle(ev, E, M)
    C = tri.cofiber
    pf, info = projective_free_part(C, seed=seed)
    if info["kept"]:
        proj_rows = info["kept"][0].projection
        for s in info["kept"][1:]:
            proj_rows = proj_rows.vstack(s.projection)
        phi = proj_rows @ tri.to_cofiber
        target = pf.rename(f"cofiber-ev({M.name})")
    else:
        target = Module.zero(M.group, f)
        phi = Matrix.zeros(f, 0, M.dim)
    cert = is_ghost(phi, M, target, family, seed=seed)
    if not cert.holds:
        raise Mismatch("evaluation cofiber failed its ghost certification")
    notes = [
        f"cofiber of the evaluation of {len(pieces)} stable classes from "
        f"{len(set(id(T) for T, _ in pieces))} test objects (source "
        f"dimension {E.dim})",
        "every family-ghost kills the evaluation, hence factors through "
        "this map; with a windowed family the factoring argument covers "
        "all true ghosts, so iterated vanishing still bounds lengths "
        "from above",
    ]
    return UniversalGhost(phi, M, target, "evaluation-cofiber", cert,
                          True, notes)
