"""Finite-dimensional kG-modules as explicit generator actions.

A `Module` stores one invertible matrix per group generator; the action of an
arbitrary group element is assembled (and cached) along the group's BFS word
tree.  Vectors are columns: ``rho(g) @ v``.  Submodules are described by
matrices whose *rows* are basis vectors of the invariant subspace.
"""

import numpy as np

from ..errors import CharMismatch, FieldMismatch, Mismatch
from ..ff.matrix import Matrix


class Module:
    __slots__ = ("group", "field", "mats", "dim", "name", "_acts")

    def __init__(self, group, field, mats, name="M", check=True):
        self.group = group
        self.field = field
        self.mats = dict(mats)
        if set(self.mats) != set(group.gens):
            raise Mismatch(
                f"need one matrix per generator {sorted(group.gens)}, "
                f"got {sorted(self.mats)}")
        dims = {m.shape for m in self.mats.values()}
        if len(dims) > 1 or (dims and next(iter(dims))[0] != next(iter(dims))[1]):
            raise Mismatch(f"generator matrices must be square of equal size: {dims}")
        self.dim = next(iter(dims))[0] if dims else 0
        for m in self.mats.values():
            if m.field != field:
                raise FieldMismatch(f"{m.field!r} vs {field!r}")
        self.name = name
        self._acts = {0: Matrix.identity(field, self.dim)}
        if check:
            self._check_relations()

    def _check_relations(self):
        for m in self.mats.values():
            if not m.is_invertible():
                raise Mismatch("generator action is singular")
        # the BFS-assembled action must satisfy rho(g)rho(e) == rho(g*e)
        g = self.group
        for name, gi in g.gens.items():
            for e in range(g.order):
                lhs = self.mats[name] @ self.action(e)
                if lhs != self.action(g.mul(gi, e)):
                    raise Mismatch(
                        f"generator {name!r} violates the group relations")

    def action(self, e):
        """Matrix of the group element with index e."""
        if e in self._acts:
            return self._acts[e]
        parent, via = self.group.word_tree()
        todo = [e]
        while todo[-1] not in self._acts:
            todo.append(parent[todo[-1]])
        for x in reversed(todo):
            if x not in self._acts:
                self._acts[x] = self.mats[via[x]] @ self._acts[parent[x]]
        return self._acts[e]

    def algebra_action(self, coeffs):
        """Matrix of the group-algebra element sum(coeffs[g] * g)."""
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for g, c in enumerate(coeffs):
            c = int(c)
            if c:
                out = out + self.action(g).scale(c)
        return out

    # -- constructions

    def rename(self, name):
        m = Module(self.group, self.field, self.mats, name=name, check=False)
        m._acts = self._acts
        return m

    @classmethod
    def zero(cls, group, field, name="0"):
        mats = {g: Matrix.zeros(field, 0, 0) for g in group.gens}
        return cls(group, field, mats, name=name, check=False)

    @classmethod
    def trivial(cls, group, field, name="k"):
        mats = {g: Matrix.identity(field, 1) for g in group.gens}
        return cls(group, field, mats, name=name, check=False)

    @classmethod
    def one_dimensional(cls, group, field, scalars, name=None):
        """1-dim module: generator -> scalar; relations are verified."""
        mats = {g: Matrix(field, [[scalars[g]]]) for g in group.gens}
        return cls(group, field, mats,
                   name=name or f"k({scalars})", check=True)

    @classmethod
    def regular(cls, group, field, name=None):
        """kG with the left action; basis = group elements."""
        n = group.order
        mats = {}
        for gname, g in group.gens.items():
            a = np.zeros((n, n), dtype=np.int32)
            for j in range(n):
                a[group.mul(g, j), j] = 1
            mats[gname] = Matrix(field, a)
        return cls(group, field, mats, name=name or f"k[{group.label}]",
                   check=False)

    def direct_sum(self, *others, name=None):
        mods = (self,) + others
        for m in mods[1:]:
            if m.group is not self.group or m.field != self.field:
                raise Mismatch("direct sum needs same group and field")
        mats = {g: Matrix.block_diag(self.field, [m.mats[g] for m in mods])
                for g in self.group.gens}
        nm = name or "(" + " + ".join(m.name for m in mods) + ")"
        return Module(self.group, self.field, mats, name=nm, check=False)

    def tensor(self, other, name=None):
        if other.group is not self.group or other.field != self.field:
            raise Mismatch("tensor needs same group and field")
        mats = {g: self.mats[g].kron(other.mats[g]) for g in self.group.gens}
        return Module(self.group, self.field, mats,
                      name=name or f"({self.name} (x) {other.name})",
                      check=False)

    def dual(self, name=None):
        g = self.group
        mats = {}
        for gname, gi in g.gens.items():
            mats[gname] = self.action(g.inverse(gi)).transpose()
        return Module(g, self.field, mats, name=name or f"{self.name}*",
                      check=False)

    def restrict(self, sub, embedding, name=None):
        """Restriction along a subgroup built by Group.as_subgroup."""
        mats = {}
        for gname, gi in sub.gens.items():
            mats[gname] = self.action(embedding[gi])
        return Module(sub, self.field, mats,
                      name=name or f"{self.name}|{sub.label}", check=False)

    # -- substructure

    def submodule(self, basis_rows, name=None):
        """(Module, basis) for the span of the given row vectors.

        The rows must span an invariant subspace; the action is solved from
        rho(g) B^T = B^T X_g.  Raises Mismatch if not invariant.
        """
        B = basis_rows.row_space_basis()
        k = B.nrows
        Bt = B.transpose()
        mats = {}
        for gname in self.group.gens:
            img = self.mats[gname] @ Bt
            X = Bt.solve_right(img)
            if X is None:
                raise Mismatch("rows do not span an invariant subspace")
            mats[gname] = X
        sub = Module(self.group, self.field, mats,
                     name=name or f"{self.name}.sub{k}", check=False)
        return sub, B

    def quotient(self, basis_rows, name=None):
        """(Module, projection) for the quotient by an invariant row span."""
        f = self.field
        S = basis_rows.row_space_basis()
        s = S.nrows
        _R, piv = S.rref()
        free = [j for j in range(self.dim) if j not in piv]
        comp = np.zeros((len(free), self.dim), dtype=np.int32)
        for i, j in enumerate(free):
            comp[i, j] = 1
        T = S.vstack(Matrix(f, comp))  # rows = sub basis then complement
        C = T.transpose()              # columns = the new basis vectors
        Cinv = C.inverse()
        proj = Matrix(f, Cinv.a[s:, :])  # v -> its quotient coordinates
        mats = {}
        for gname in self.group.gens:
            full = Cinv @ self.mats[gname] @ C
            if np.any(full.a[s:, :s]):
                raise Mismatch("rows do not span an invariant subspace")
            mats[gname] = Matrix(f, full.a[s:, s:])
        quo = Module(self.group, self.field, mats,
                     name=name or f"{self.name}/sub{s}", check=False)
        return quo, proj

    def spin(self, seed_rows):
        """Row basis of the submodule generated by the given row vectors."""
        f = self.field
        basis = seed_rows.row_space_basis()
        if basis.nrows == 0:
            return basis
        frontier = basis
        while True:
            images = []
            for gname in self.group.gens:
                images.append((self.mats[gname] @ frontier.transpose()).transpose())
            stacked = basis
            for im in images:
                stacked = stacked.vstack(im)
            new_basis = stacked.row_space_basis()
            if new_basis.nrows == basis.nrows:
                return new_basis
            # rows genuinely new this round: keep spinning from everything
            frontier = new_basis
            basis = new_basis

    def __repr__(self):
        return (f"Module({self.name!r}, dim {self.dim} over {self.field!r}, "
                f"group {self.group.label})")
