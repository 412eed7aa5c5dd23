"""Commutative algebras given by structure constants."""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from .linalg import Matrix, Subspace, rref
from .scalar import Field, Scalar, render_scalar


class AlgebraError(ValueError):
    pass


class AlgebraMismatch(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    pass


class Algebra:
    """A finite-dimensional commutative algebra.

    ``products`` maps index pairs ``(i, j)`` with ``i <= j`` to the coordinate
    vector of ``e_i e_j``; ``e_j e_i`` is read from the same entry, so the
    algebra is commutative by construction. ``axes`` holds coordinate vectors
    of the designated generating axes.
    """

    def __init__(self, field: Field, basis_names: Sequence[str], products, axes=(), eta=None,
                 name: str | None = None):
        self.field = field
        self.basis_names = tuple(basis_names)
        n = self.dim = len(self.basis_names)
        zero = field.zero
        table = {}
        for (i, j), vec in dict(products).items():
            if i > j:
                i, j = j, i
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError(f"product index ({i},{j}) out of range")
            vec = tuple(field(x) for x in vec)
            if len(vec) != n:
                raise AlgebraError(f"product ({i},{j}) has length {len(vec)}, expected {n}")
            if (i, j) in table and table[(i, j)] != vec:
                raise AlgebraError(f"conflicting entries for product ({i},{j})")
            table[(i, j)] = vec
        for i in range(n):
            for j in range(i, n):
                table.setdefault((i, j), (zero,) * n)
        self._table = table
        # sparse copy used by multiply()
        self._sparse = [[None] * n for _ in range(n)]
        for (i, j), vec in table.items():
            nz = tuple((k, c) for k, c in enumerate(vec) if c)
            self._sparse[i][j] = self._sparse[j][i] = nz
        self.axes = tuple(self._as_vector(a) for a in axes)
        self.eta = None if eta is None else field(eta)
        self.name = name

    def _as_vector(self, a) -> tuple:
        if isinstance(a, int):
            v = [self.field.zero] * self.dim
            v[a] = self.field.one
            return tuple(v)
        if isinstance(a, Element):
            return a.coords
        v = tuple(self.field(x) for x in a)
        if len(v) != self.dim:
            raise AlgebraError("axis vector has the wrong length")
        return v

    # -- elements -----------------------------------------------------------

    def element(self, coords) -> "Element":
        return Element(self, self._as_vector(coords))

    def basis(self, i: int) -> "Element":
        return self.element(i)

    @property
    def zero(self) -> "Element":
        return Element(self, (self.field.zero,) * self.dim)

    def axis_elements(self) -> list:
        return [Element(self, a) for a in self.axes]

    def product(self, i: int, j: int) -> tuple:
        return self._table[(i, j) if i <= j else (j, i)]

    def multiply_vectors(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        out = [self.field.zero] * n
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        sp = self._sparse
        for i, a in xs:
            row = sp[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def multiply(self, x: "Element", y: "Element") -> "Element":
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatch("elements belong to different algebras")
        return Element(self, self.multiply_vectors(x.coords, y.coords))

    def adjoint_matrix(self, x) -> Matrix:
        """Matrix of ``y -> x y``; column ``j`` holds ``x e_j``."""
        v = x.coords if isinstance(x, Element) else self._as_vector(x)
        n = self.dim
        ident = Matrix.identity(n, self.field).rows
        cols = [self.multiply_vectors(v, ident[j]) for j in range(n)]
        return Matrix.from_columns(cols, self.field)

    def is_idempotent(self, x) -> bool:
        v = x.coords if isinstance(x, Element) else self._as_vector(x)
        return self.multiply_vectors(v, v) == tuple(v)

    # -- subspaces ----------------------------------------------------------

    def span(self, vectors: Iterable) -> Subspace:
        vs = [v.coords if isinstance(v, Element) else self._as_vector(v) for v in vectors]
        return Subspace.span(vs, self.field, self.dim)

    def generated_subalgebra(self, gens: Iterable) -> Subspace:
        """Smallest subspace containing ``gens`` and closed under products."""
        space = self.span(gens)
        for _ in range(self.dim + 1):
            prods = [self.multiply_vectors(u, v)
                     for i, u in enumerate(space.basis) for v in space.basis[i:]]
            bigger = Subspace.span(space.basis + tuple(prods), self.field, self.dim)
            if bigger.dim == space.dim:
                return space
            space = bigger
        return space

    def ideal_closure(self, seed: Iterable) -> Subspace:
        """Smallest subspace containing ``seed`` and stable under every ``ad_{e_i}``."""
        space = self.span(seed)
        n = self.dim
        ident = Matrix.identity(n, self.field).rows
        for _ in range(n + 1):
            prods = [self.multiply_vectors(e, v) for e in ident for v in space.basis]
            bigger = Subspace.span(space.basis + tuple(prods), self.field, n)
            if bigger.dim == space.dim:
                return space
            space = bigger
        return space

    def is_ideal(self, space: Subspace) -> bool:
        ident = Matrix.identity(self.dim, self.field).rows
        return all(self.multiply_vectors(e, v) in space for e in ident for v in space.basis)

    def is_subalgebra(self, space: Subspace) -> bool:
        b = space.basis
        return all(self.multiply_vectors(u, v) in space for i, u in enumerate(b) for v in b[i:])

    def quotient(self, ideal: Subspace) -> "Algebra":
        """Quotient algebra on the non-pivot coordinates of the ideal's RREF basis."""
        if not self.is_ideal(ideal):
            raise NotAnIdeal("subspace is not closed under multiplication by the algebra")
        keep = [j for j in range(self.dim) if j not in set(ideal.pivots)]
        ident = Matrix.identity(self.dim, self.field).rows

        def project(v):
            r = ideal.reduce(v)
            return tuple(r[j] for j in keep)

        products = {}
        for a, i in enumerate(keep):
            for b in range(a, len(keep)):
                products[(a, b)] = project(self.multiply_vectors(ident[i], ident[keep[b]]))
        names = [self.basis_names[j] + "+I" for j in keep]
        axes = [project(a) for a in self.axes]
        q = Algebra(self.field, names, products, axes=axes, eta=self.eta,
                    name=None if self.name is None else f"{self.name}/I")
        q.projection = project
        return q

    def subalgebra(self, space: Subspace, names: Sequence[str] | None = None) -> "Algebra":
        """The subalgebra ``space`` as an algebra on its RREF basis."""
        if not self.is_subalgebra(space):
            raise AlgebraError("subspace is not a subalgebra")
        return self.rebase(space.basis, names=names, axes=[
            space.coordinates(a) for a in self.axes if a in space])

    def rebase(self, vectors: Sequence[Sequence], names: Sequence[str] | None = None,
               axes=None) -> "Algebra":
        """Structure constants relative to ``vectors``, which must be independent and
        span a subalgebra. ``axes`` (if given) are coordinates in the new basis."""
        vs = [v.coords if isinstance(v, Element) else self._as_vector(v) for v in vectors]
        k = len(vs)
        space = Subspace.span(vs, self.field, self.dim)
        if space.dim != k:
            raise AlgebraError("rebase vectors are linearly dependent")
        # coordinates relative to vs: solve through the RREF of the stacked system
        cols = Matrix.from_columns(vs, self.field)

        def coords(w):
            aug = [list(r) + [w[i]] for i, r in enumerate(cols.rows)]
            red, pivots = rref(aug, self.field)
            if pivots and pivots[-1] == k:
                raise AlgebraError("product leaves the span of the new basis")
            out = [self.field.zero] * k
            for r, pc in zip(red, pivots):
                out[pc] = r[k]
            return tuple(out)

        products = {(a, b): coords(self.multiply_vectors(vs[a], vs[b]))
                    for a in range(k) for b in range(a, k)}
        names = names or [f"f{i}" for i in range(k)]
        return Algebra(self.field, names, products, axes=axes or (), eta=self.eta)

    def same_structure(self, other: "Algebra") -> bool:
        return self.field == other.field and self.dim == other.dim and \
            self._table == other._table

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        d = {
            "field": self.field.tag,
            "basis": list(self.basis_names),
            "products": {f"{i},{j}": [render_scalar(x) for x in vec]
                         for (i, j), vec in sorted(self._table.items()) if any(vec)},
            "axes": [self._axis_json(a) for a in self.axes],
        }
        if self.eta is not None:
            d["eta"] = render_scalar(self.eta)
        if self.name:
            d["name"] = self.name
        return d

    def _axis_json(self, a):
        nz = [i for i, x in enumerate(a) if x]
        if len(nz) == 1 and a[nz[0]] == 1:
            return nz[0]
        return [render_scalar(x) for x in a]

    @classmethod
    def from_json(cls, d: dict) -> "Algebra":
        try:
            field = Field.from_tag(d["field"])
            names = d["basis"]
            products = {}
            for key, vec in d.get("products", {}).items():
                i, j = (int(s) for s in key.split(","))
                if i > j:
                    raise AlgebraError(f"product key {key!r} must have i <= j")
                products[(i, j)] = [field(x) for x in vec]
            axes = [a if isinstance(a, int) else [field(x) for x in a] for a in d.get("axes", [])]
            eta = field(d["eta"]) if d.get("eta") is not None else None
        except (KeyError, TypeError) as exc:
            raise AlgebraError(f"malformed algebra JSON: {exc}") from exc
        return cls(field, names, products, axes=axes, eta=eta, name=d.get("name"))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def __repr__(self):
        label = self.name or "Algebra"
        return f"<{label} dim={self.dim} over {self.field.tag}>"


class Element:
    """An element of an :class:`Algebra`; ``*`` is the algebra product when both
    operands are elements and scalar multiplication otherwise."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: Sequence[Scalar]):
        self.algebra = algebra
        self.coords = tuple(coords)
        if len(self.coords) != algebra.dim:
            raise AlgebraError("coordinate vector has the wrong length")

    def _same(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        c = self.algebra.field(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __rmul__(self, other):
        c = self.algebra.field(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __truediv__(self, other):
        c = self.algebra.field(other)
        return Element(self.algebra, tuple(a / c for a in self.coords))

    def __eq__(self, other):
        if isinstance(other, Element):
            return other.algebra is self.algebra and other.coords == self.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        terms = [f"{render_scalar(c)}*{n}" for c, n in zip(self.coords, self.algebra.basis_names)
                 if c]
        return " + ".join(terms) or "0"


def multiply(x: Element, y: Element) -> Element:
    return x.algebra.multiply(x, y)


def adjoint_matrix(x: Element) -> Matrix:
    return x.algebra.adjoint_matrix(x)


def generated_subalgebra(gens: Sequence[Element]) -> Subspace:
    return gens[0].algebra.generated_subalgebra(gens)


def ideal_closure(algebra: Algebra, seed: Iterable) -> Subspace:
    return algebra.ideal_closure(seed)


def quotient(algebra: Algebra, ideal: Subspace) -> Algebra:
    return algebra.quotient(ideal)
