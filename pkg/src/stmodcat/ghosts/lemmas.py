"""Arithmetic lemmas about ghost lengths, verified on concrete instances.

Two families of identities:

- The ceiling identity: measuring a module against n-fold composites of
  ghosts divides its length by n, rounded up.  Over a cyclic p-group the
  ghost powers are realized by powers of (g - 1), so both sides are
  computable by brute force and compared at exact equality.
- Triangle subadditivity: for a triangle M' -> M -> M'', the length of M
  is at most the sum of the lengths of the ends (splice a ghost chain
  through the triangle).  Instances are built from the short exact
  sequences 0 -> M_a -> M_{a+b} -> M_b -> 0 over cyclic p-groups, with
  all three lengths computed by certified exact chains.
"""

from ..errors import Mismatch
from ..ff.field import GF
from ..ff.matrix import Matrix
from ..groups import cyclic
from ..modrep.catalogs import jordan_module
from ..stable.stably import is_stably_trivial
from .lengths import length

#: Default instances: (p, r, j, n) for the ceiling identity over C_{p^r}
#: measuring M_j against n-fold ghost composites.
CEILING_INSTANCES = (
    (2, 3, 3, 2),
    (2, 3, 4, 3),
    (3, 2, 4, 2),
    (3, 2, 2, 2),
    (2, 2, 2, 2),
)

#: Default instances: (p, r, a, b) for subadditivity on
#: 0 -> M_a -> M_{a+b} -> M_b -> 0 over C_{p^r}.
SUBADDITIVITY_INSTANCES = (
    (2, 2, 1, 1),
    (2, 3, 3, 2),
    (2, 3, 1, 3),
    (3, 2, 2, 2),
    (3, 2, 4, 4),
)


def _first_vanishing_power(M, step_power, seed=0):
    """Least m with (g-1)^(step_power * m) stably trivial on M."""
    group, f = M.group, M.field
    gen = next(g for g in range(group.order)
               if group.element_order(g) == group.order)
    gm1 = M.action(gen) - Matrix.identity(f, M.dim)
    stepmat = gm1.pow(step_power)
    comp = Matrix.identity(f, M.dim)
    for m in range(1, M.group.order + 2):
        comp = stepmat @ comp
        if is_stably_trivial(comp, M, M):
            return m
    raise Mismatch("power chain did not vanish")


def verify_ceiling_identity(p, r, j, n, seed=0):
    """One instance of: length against n-fold ghost composites equals
    ceil(length / n).  Both sides brute-forced over C_{p^r} on M_j."""
    pr = p ** r
    if not (1 <= j < pr and n >= 1):
        raise Mismatch("need 1 <= j < p^r and n >= 1")
    G = cyclic(pr)
    f = GF(p)
    M = jordan_module(G, f, j)
    plain = _first_vanishing_power(M, 1, seed=seed)
    nfold = _first_vanishing_power(M, n, seed=seed)
    expected = -(-plain // n)
    ok = (nfold == expected)
    return {
        "lemma": "ceiling-identity",
        "group": G.label,
        "module": M.name,
        "n": n,
        "length": plain,
        "n_fold_length": nfold,
        "expected": expected,
        "ok": ok,
    }


def verify_triangle_subadditivity(p, r, a, b, seed=0):
    """One instance of: the length of the middle of a triangle is at most
    the sum of the lengths of the ends, on 0 -> M_a -> M_{a+b} -> M_b -> 0
    over C_{p^r} (with all three lengths computed exactly)."""
    pr = p ** r
    if not (a >= 1 and b >= 1 and a + b <= pr):
        raise Mismatch("need a, b >= 1 and a + b <= p^r")
    G = cyclic(pr)
    f = GF(p)
    Mab = jordan_module(G, f, a + b)
    gen = next(g for g in range(pr) if G.element_order(g) == pr)
    gm1 = Mab.action(gen) - Matrix.identity(f, a + b)
    sub_rows = gm1.pow(b).transpose().row_space_basis()
    sub, _B = Mab.submodule(sub_rows, name=f"M_{a}")
    quo, _proj = Mab.quotient(sub_rows, name=f"M_{b}")
    if sub.dim != a or quo.dim != b:
        raise Mismatch("the (g-1)-power filtration has wrong dimensions")
    l_sub = length(sub, "trivial", seed=seed)
    l_mid = length(Mab, "trivial", seed=seed)
    l_quo = length(quo, "trivial", seed=seed)
    for res in (l_sub, l_mid, l_quo):
        if not res.exact:
            raise Mismatch(f"length of {res.module} not exact: {res!r}")
    ok = l_mid.value <= l_sub.value + l_quo.value
    return {
        "lemma": "triangle-subadditivity",
        "group": G.label,
        "triangle": f"M_{a} -> M_{a + b} -> M_{b}",
        "middle_length": l_mid.value,
        "end_lengths": (l_sub.value, l_quo.value),
        "ok": ok,
    }


def verify_length_lemmas(seed=0, ceiling=None, subadditivity=None):
    """Run the default (or given) instances of both lemmas.

    Returns {"records": [...], "ok": bool}; ten records by default.
    """
    records = []
    for (p, r, j, n) in (ceiling if ceiling is not None
                         else CEILING_INSTANCES):
        records.append(verify_ceiling_identity(p, r, j, n, seed=seed))
    for (p, r, a, b) in (subadditivity if subadditivity is not None
                         else SUBADDITIVITY_INSTANCES):
        records.append(verify_triangle_subadditivity(p, r, a, b, seed=seed))
    return {"records": records, "ok": all(rec["ok"] for rec in records)}
