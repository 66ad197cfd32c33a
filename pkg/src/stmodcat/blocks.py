"""Block theory for group algebras: the principal idempotent counting
formula, central primitive idempotent decompositions via center splitting,
block membership, the explicit dihedral idempotent families, and the
thick-subcategory criterion for the principal block."""

from math import lcm

import numpy as np

from .determinism import rng_for
from .errors import CharMismatch, FieldTooSmall, Mismatch
from .ff import poly as fpoly
from .ff.matrix import Matrix
from .modrep.covers import (_algebra_mul, _crt_idempotent_polys,
                            projective_indecomposables)
from .modrep.decompose import projective_free_part
from .modrep.homs import hom_space
from .modrep.structure import composition_factors, simple_modules


class AlgebraElement:
    """An element of the group algebra kG, stored as one field-encoded
    coefficient per group element."""

    __slots__ = ("group", "field", "coeffs")

    def __init__(self, group, field, coeffs):
        arr = np.ascontiguousarray(np.asarray(coeffs, dtype=np.int32))
        if arr.shape != (group.order,):
            raise Mismatch("coefficient vector length must equal |G|")
        self.group = group
        self.field = field
        self.coeffs = arr

    @classmethod
    def zero(cls, group, field):
        return cls(group, field, np.zeros(group.order, dtype=np.int32))

    @classmethod
    def one(cls, group, field):
        c = np.zeros(group.order, dtype=np.int32)
        c[0] = 1
        return cls(group, field, c)

    @classmethod
    def from_dict(cls, group, field, entries):
        c = np.zeros(group.order, dtype=np.int32)
        for g, val in entries.items():
            c[g] = field.add(int(c[g]), val)
        return cls(group, field, c)

    def __add__(self, other):
        return AlgebraElement(self.group, self.field,
                              self.field.add_vec(self.coeffs, other.coeffs))

    def __mul__(self, other):
        prod = _algebra_mul(self.group, self.field, self.coeffs, other.coeffs)
        return AlgebraElement(self.group, self.field, prod)

    def scaled(self, c):
        f = self.field
        out = np.array([f.mul(int(v), c) for v in self.coeffs],
                       dtype=np.int32)
        return AlgebraElement(self.group, f, out)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.group is other.group
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.group), self.coeffs.tobytes()))

    def is_zero(self):
        return not self.coeffs.any()

    def is_idempotent(self):
        return (self * self) == self

    def is_central(self):
        for cls in self.group.conjugacy_classes():
            vals = {int(self.coeffs[g]) for g in cls}
            if len(vals) > 1:
                return False
        return True

    def conjugate_by(self, s):
        out = np.zeros_like(self.coeffs)
        for g in range(self.group.order):
            out[self.group.conjugate(s, g)] = self.coeffs[g]
        return AlgebraElement(self.group, self.field, out)

    def support(self):
        return [g for g in range(self.group.order) if self.coeffs[g]]

    def __repr__(self):
        terms = []
        for g in self.support():
            c = int(self.coeffs[g])
            nm = self.group.element_names[g]
            terms.append(nm if c == 1 else f"{c}*{nm}")
        return " + ".join(terms) if terms else "0"


class BlockDecomposition:
    """Complete list of the primitive central idempotents of kG."""

    __slots__ = ("group", "field", "idempotents", "principal_index",
                 "block_dims", "simples_per_block")

    def __init__(self, group, field, idempotents, principal_index,
                 block_dims, simples_per_block):
        self.group = group
        self.field = field
        self.idempotents = idempotents
        self.principal_index = principal_index
        self.block_dims = block_dims
        self.simples_per_block = simples_per_block

    def __len__(self):
        return len(self.idempotents)

    def __repr__(self):
        return (f"BlockDecomposition({self.group.label}, "
                f"{len(self.idempotents)} blocks, "
                f"principal={self.principal_index})")


def principal_idempotent(group, field, p=None):
    """The block idempotent of the trivial module, by the counting formula:
    for p-regular g the coefficient is |{(u, s) : u of p-power order,
    s p-regular, us = g}| divided by |{p-regular elements}|; zero on
    p-singular elements.  The result is verified to be a central idempotent
    before it is returned."""
    p = p or field.p
    if p != field.p:
        raise CharMismatch(f"field has characteristic {field.p}, not {p}")
    if group.order % p != 0:
        raise CharMismatch(f"{p} does not divide |{group.label}| = "
                           f"{group.order}")
    pels = group.p_power_elements(p)  # identity included
    preg = group.p_regular_elements(p)
    counts = np.zeros(group.order, dtype=np.int64)
    for u in pels:
        row = group.table[u, preg]
        np.add.at(counts, row, 1)
    inv = pow(len(preg) % p, -1, p)
    coeffs = np.zeros(group.order, dtype=np.int32)
    coeffs[preg] = (counts[preg] % p) * inv % p
    e = AlgebraElement(group, field, coeffs)
    if not e.is_idempotent() or not e.is_central():
        raise Mismatch("principal idempotent formula failed its checks")
    return e


# -- center of kG and its splitting

def _class_sums(group, field):
    classes = group.conjugacy_classes()
    sums = []
    for cls in classes:
        c = np.zeros(group.order, dtype=np.int32)
        for g in cls:
            c[g] = 1
        sums.append(AlgebraElement(group, field, c))
    return classes, sums


def _to_class_coords(classes, elt):
    return [int(elt.coeffs[cls[0]]) for cls in classes]


def _center_subspace_basis(field, classes, elements):
    rows = Matrix(field, np.array(
        [_to_class_coords(classes, e) for e in elements], dtype=np.int32))
    return rows.row_space_basis()


def _from_class_coords(group, field, classes, coords):
    c = np.zeros(group.order, dtype=np.int32)
    for val, cls in zip(coords, classes):
        if val:
            for g in cls:
                c[g] = val
    return AlgebraElement(group, field, c)


def _mult_matrix_on(field, classes, group, basis, w):
    """Matrix of multiplication by w on the span of `basis` (class coords)."""
    cols = []
    for i in range(basis.nrows):
        v = _from_class_coords(group, field, classes, basis.a[i, :])
        prod = w * v
        cols.append(_to_class_coords(classes, prod))
    img = Matrix(field, np.array(cols, dtype=np.int32))
    X = basis.transpose().solve_right(img.transpose())
    if X is None:
        raise Mismatch("center multiplication left the subspace")
    return X


def _apply_poly_in_algebra(poly_coeffs, w, unit):
    """Evaluate a polynomial at w inside the unital algebra with unit
    `unit` (Horner)."""
    acc = AlgebraElement.zero(w.group, w.field)
    for c in reversed(poly_coeffs):
        acc = acc * w
        if c:
            acc = acc + unit.scaled(c)
    return acc


def block_decomposition(group, field, seed=0, certify=True):
    """All primitive central idempotents of kG, split field required.

    Splits the center (spanned by conjugacy class sums) by factoring minimal
    polynomials of center elements; raises FieldTooSmall naming the required
    extension degree if any block's residue field is larger than k."""
    if group.order > 400:
        raise Mismatch("block_decomposition supports |G| <= 400")
    classes, csums = _class_sums(group, field)
    pending = [AlgebraElement.one(group, field)]
    done = []
    needed_degrees = []
    guard = 0
    while pending:
        guard += 1
        if guard > 4 * len(classes) + 40:
            raise Mismatch("center splitting did not terminate")
        e = pending.pop()
        ez_elems = [e * z for z in csums]
        basis = _center_subspace_basis(field, classes, ez_elems)
        if basis.nrows == 1:
            done.append(e)
            continue
        split = None
        offender_deg = 1
        nil_parts = []
        for z in csums:
            w = e * z
            mat = _mult_matrix_on(field, classes, group, basis, w)
            mp = mat.minpoly()
            _unit, facs = fpoly.factor(field, mp, seed=seed)
            if len(facs) >= 2:
                split = (w, facs)
                break
            f0, _m0 = facs[0]
            if fpoly.deg(f0) > 1:
                offender_deg = lcm(offender_deg, fpoly.deg(f0))
            else:
                lam = field.neg(f0[0])
                nil_parts.append(w + e.scaled(field.neg(lam)))
        if split is not None:
            w, facs = split
            polys = _crt_idempotent_polys(field, facs)
            pieces = [_apply_poly_in_algebra(pc, w, e) for pc in polys]
            total = AlgebraElement.zero(group, field)
            for piece in pieces:
                if not piece.is_idempotent():
                    raise Mismatch("center split produced a non-idempotent")
                total = total + piece
            if total != e:
                raise Mismatch("center split pieces do not sum back")
            pending.extend(pieces)
            continue
        if offender_deg > 1:
            needed_degrees.append(field.d * offender_deg)
            continue
        _certify_local_center(field, classes, group, basis, e, nil_parts)
        done.append(e)
    if needed_degrees:
        m = lcm(field.d, *needed_degrees)
        raise FieldTooSmall(
            f"splitting the center of k{group.label} needs "
            f"GF({field.p}^{m}); rebuild over it (current degree "
            f"{field.d})")
    return _assemble_decomposition(group, field, done, seed, certify)


def _certify_local_center(field, classes, group, basis, e, nil_parts):
    """Certify that e's center slice is local: the residue-linear parts span
    a codimension-1 nil ideal."""
    if not nil_parts:
        raise Mismatch("local certification requires nil parts")
    rows = [_to_class_coords(classes, n) for n in nil_parts]
    N = Matrix(field, np.array(rows, dtype=np.int32)).row_space_basis()
    if N.nrows != basis.nrows - 1:
        raise Mismatch("nil parts do not span a codimension-1 subspace")
    current = [_from_class_coords(group, field, classes, N.a[i, :])
               for i in range(N.nrows)]
    for _round in range(basis.nrows + 1):
        nxt = []
        for a in current:
            for b in nil_parts:
                prod = a * b
                if not prod.is_zero():
                    nxt.append(prod)
        if not nxt:
            return
        rows = Matrix(field, np.array(
            [_to_class_coords(classes, x) for x in nxt], dtype=np.int32))
        if not N.in_row_space(rows):
            raise Mismatch("nil span is not an ideal")
        current = nxt
    raise Mismatch("nil ideal failed to vanish")


def _assemble_decomposition(group, field, idems, seed, certify):
    # deterministic order: by support size, then coefficient bytes
    idems = sorted(idems, key=lambda e: (len(e.support()),
                                         e.coeffs.tobytes()))
    _verify_idempotent_family(group, field, idems)
    # e acts on the trivial module as the sum of its coefficients
    principal_hits = []
    for i, e in enumerate(idems):
        tot = 0
        for g in e.support():
            tot = field.add(tot, int(e.coeffs[g]))
        if tot == 1:
            principal_hits.append(i)
    if len(principal_hits) != 1:
        raise Mismatch("exactly one block must act as identity on k")
    principal = principal_hits[0]
    dims = []
    for e in idems:
        mat = _right_mult_all(group, field, e)
        dims.append(mat.rank())
    simples_per_block = None
    if certify:
        simples_per_block = _match_linkage(group, field, idems, seed)
    return BlockDecomposition(group, field, idems, principal, dims,
                              simples_per_block)


def _right_mult_all(group, field, e):
    """Matrix whose columns are e*g over all g (spans ekG)."""
    n = group.order
    cols = np.zeros((n, n), dtype=np.int32)
    for g in range(n):
        gvec = np.zeros(n, dtype=np.int32)
        gvec[g] = 1
        cols[:, g] = _algebra_mul(group, field, e.coeffs, gvec)
    return Matrix(field, cols)


def _verify_idempotent_family(group, field, idems):
    total = AlgebraElement.zero(group, field)
    for i, e in enumerate(idems):
        if not e.is_idempotent():
            raise Mismatch(f"block idempotent {i} fails e^2 = e")
        if not e.is_central():
            raise Mismatch(f"block idempotent {i} is not central")
        total = total + e
        for j, f2 in enumerate(idems):
            if i < j and not (e * f2).is_zero():
                raise Mismatch(f"block idempotents {i},{j} not orthogonal")
    if total != AlgebraElement.one(group, field):
        raise Mismatch("block idempotents do not sum to 1")


def _match_linkage(group, field, idems, seed):
    """Certify block count against linkage classes of the simples, and
    return the per-block simple count."""
    simples = simple_modules(group, field, seed=seed)
    pims = projective_indecomposables(group, field, seed=seed)
    # linkage graph: union simples appearing in each PIM
    parent = list(range(len(simples)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for pim in pims:
        factors = composition_factors(pim.module, seed=seed)
        idx = [_simple_index(simples, Fq) for Fq in factors]
        for other in idx[1:]:
            union(idx[0], other)
    n_classes = len({find(i) for i in range(len(simples))})
    if n_classes != len(idems):
        raise Mismatch(
            f"primitivity certificate failed: {len(idems)} central "
            f"idempotents vs {n_classes} linkage classes")
    per_block = [0] * len(idems)
    for i, S in enumerate(simples):
        b = block_of(S, _light_decomp(group, field, idems))
        if not isinstance(b, int):
            raise Mismatch("a simple module split across blocks")
        per_block[b] += 1
    return per_block


def _light_decomp(group, field, idems):
    return BlockDecomposition(group, field, idems, 0, None, None)


def _simple_index(simples, S):
    for i, T in enumerate(simples):
        if S.dim == T.dim and len(hom_space(S, T)) > 0:
            return i
    raise Mismatch("composition factor matches no known simple")


def block_of(M, decomposition, seed=0):
    """Index of the block containing M's projective-free part, or the string
    "split across blocks"."""
    pf, _info = projective_free_part(M, seed=seed)
    target = pf if pf.dim > 0 else M
    hits = []
    for i, e in enumerate(decomposition.idempotents):
        act = target.algebra_action(e.coeffs)
        if act.rank() > 0:
            hits.append((i, act))
    if len(hits) == 1:
        i, act = hits[0]
        ident = Matrix.identity(M.field, target.dim)
        if act == ident:
            return i
        raise Mismatch("single block acts but not as identity")
    return "split across blocks"


# -- explicit dihedral-family idempotents

def cql_idempotent_vector(group, field, q, l, i):
    """e_i in kC_{ql}: the sum over j of (zeta^i x^q)^j, j = 0..l-1."""
    if group.order != q * l:
        raise Mismatch("group order must be ql")
    z = 1 if i % l == 0 else field.primitive_root_of_unity(l)
    c = np.zeros(group.order, dtype=np.int32)
    for j in range(l):
        pos = (q * j) % (q * l)
        c[pos] = field.add(int(c[pos]), field.pow(z, (i * j) % l))
    return c


def cql_idempotent(group, field, q, l, i):
    return AlgebraElement(group, field, cql_idempotent_vector(
        group, field, q, l, i))


def d2ql_rotation_idempotent(group, field, q, l, i):
    """e_i of the rotation subalgebra, inside kD_{2ql}: rotations x^j sit at
    indices 0..ql-1."""
    if group.order != 2 * q * l:
        raise Mismatch("group order must be 2ql")
    z = 1 if i % l == 0 else field.primitive_root_of_unity(l)
    c = np.zeros(group.order, dtype=np.int32)
    for j in range(l):
        pos = (q * j) % (q * l)
        c[pos] = field.add(int(c[pos]), field.pow(z, (i * j) % l))
    return AlgebraElement(group, field, c)


def d2ql_principal_vector(group, field, q, l):
    """e_0 = 1 + x^q + x^{2q} + ... + x^{(l-1)q} in kD_{2ql}."""
    return d2ql_rotation_idempotent(group, field, q, l, 0)


def d2ql_eprime(group, field, q, l, i):
    """e'_i = e_i + e_{l-i} in kD_{2ql}, for 1 <= i <= (l-1)/2."""
    if not (1 <= i <= (l - 1) // 2):
        raise Mismatch("block index out of range")
    a = d2ql_rotation_idempotent(group, field, q, l, i)
    b = d2ql_rotation_idempotent(group, field, q, l, l - i)
    return a + b


def verify_alpha_iso(q, l, field):
    """Check that the algebra map from kD_{2q} to e_0 kD_{2ql} determined by
    the subgroup embedding (rotation -> rotation^l, reflection -> reflection)
    is an isomorphism: multiplicative, injective, image dimension 2q."""
    from .groups import build_group
    big = build_group(f"d{2 * q * l}")
    small = build_group(f"d{2 * q}")
    e0 = d2ql_principal_vector(big, field, q, l)
    n_small, n_big = q, q * l

    def embed(idx):
        i, e = idx % n_small, idx // n_small
        return (l * i) % n_big + n_big * e

    images = []
    for g in range(small.order):
        gvec = np.zeros(big.order, dtype=np.int32)
        gvec[embed(g)] = 1
        images.append(_algebra_mul(big, field, e0.coeffs, gvec))
    mult_ok = True
    for a in range(small.order):
        for b in range(small.order):
            lhs = _algebra_mul(big, field, images[a], images[b])
            rhs = images[int(small.table[a, b])]
            if not np.array_equal(lhs, rhs):
                mult_ok = False
    img_matrix = Matrix(field, np.array(images, dtype=np.int32))
    inj = img_matrix.rank() == small.order
    e0_dim = _right_mult_all(big, field, e0).rank()
    ok = mult_ok and inj and e0_dim == 2 * q
    witness = {
        "group": big.label,
        "subalgebra_generators": {"rotation": f"e0*x^{l}",
                                  "reflection": "e0*y"},
        "multiplicative": mult_ok,
        "injective": inj,
        "dim_e0_block": int(e0_dim),
        "expected_dim": 2 * q,
    }
    return ok, witness


def thick_k_equals_B0(group, field, p=None):
    """True iff the centralizer of every order-p element is p-nilpotent, the
    criterion for the thick subcategory of k to be all of stmod(B0)."""
    p = p or field.p
    if group.order % p != 0:
        raise CharMismatch(f"{p} does not divide the group order")
    for g in range(group.order):
        if group.element_order(g) != p:
            continue
        cz = group.centralizer_of_element(g)
        C, _emb = group.as_subgroup(cz)
        if not C.is_p_nilpotent(p):
            return False
    return True
