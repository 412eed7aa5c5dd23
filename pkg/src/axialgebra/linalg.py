"""Dense exact linear algebra over a :class:`~axialgebra.scalar.Field`.

Vectors are tuples of scalars. Linear maps act on column vectors, so a
matrix ``m`` sends ``v`` to ``m @ v`` and the eigenspace of ``m`` at ``lam``
consists of the rows ``v`` with ``m @ v == lam * v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .scalar import Field, FpElement, Scalar


class LinalgError(ValueError):
    pass


class NotSquare(LinalgError):
    pass


class NotSymmetric(LinalgError):
    pass


class AmbientMismatch(LinalgError):
    pass


class UnsupportedField(LinalgError):
    pass


Vector = tuple


def rref(rows: Sequence[Sequence[Scalar]], field: Field, ncols: int | None = None):
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    if field.p is not None:
        ints = [[int(x) for x in r] for r in rows]
        red, pivots = kernels.rref_modp(ints, field.p)
        p = field.p
        return [[FpElement(x, p) for x in r] for r in red], pivots
    return _rref_rational(rows)


def _rref_rational(a):
    m, n = len(a), len(a[0])
    a = [[x if isinstance(x, Fraction) else Fraction(x) for x in r] for r in a]
    pivots = []
    r = 0
    for j in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][j]
        prow = [x * inv if x else x for x in a[r]]
        a[r] = prow
        nz = [k for k in range(j, n) if prow[k]]
        for i in range(m):
            f = a[i][j]
            if i == r or not f:
                continue
            row = a[i]
            for k in nz:
                row[k] -= f * prow[k]
        pivots.append(j)
        r += 1
    return a[:r], pivots


class Matrix:
    """Immutable dense matrix with entries in one field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], field: Field, ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise LinalgError("ragged matrix")
        else:
            self.ncols = ncols or 0

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        one, zero = field.one, field.zero
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, m: int, n: int, field: Field) -> "Matrix":
        return cls([[field.zero] * n for _ in range(m)], field, ncols=n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], field: Field) -> "Matrix":
        n = len(cols)
        m = len(cols[0]) if cols else 0
        return cls([[cols[j][i] for j in range(n)] for i in range(m)], field, ncols=n)

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows), self.field, ncols=self.nrows) if self.nrows else \
            Matrix.zeros(self.ncols, 0, self.field)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise LinalgError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.rows)) if other.nrows else []
            zero = self.field.zero
            out = []
            for r in self.rows:
                nz = [(k, x) for k, x in enumerate(r) if x]
                out.append([sum((x * c[k] for k, x in nz), zero) for c in cols])
            return Matrix(out, self.field, ncols=other.ncols)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise LinalgError("vector length mismatch")
        zero = self.field.zero
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), zero) for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.field, ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.field, ncols=self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix([[c * a for a in r] for r in self.rows], self.field, ncols=self.ncols)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and \
            self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]}, {self.field.tag})"

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def rank(self) -> int:
        return len(rref(self.rows, self.field)[0]) if self.nrows else 0

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise NotSquare("inverse of a non-square matrix")
        n = self.nrows
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)]
               for i, r in enumerate(self.rows)]
        red, pivots = rref(aug, self.field)
        if pivots[:n] != list(range(n)) or len(red) < n:
            raise LinalgError("matrix is singular")
        return Matrix([r[n:] for r in red], self.field)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field**ambient_dim`` kept as an RREF basis (canonical form)."""

    field: Field
    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence], field: Field, ambient_dim: int) -> "Subspace":
        vs = [tuple(field(x) for x in v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in dimension {ambient_dim}")
        if not vs:
            return cls(field, ambient_dim)
        red, pivots = rref(vs, field)
        return cls(field, ambient_dim, tuple(tuple(r) for r in red), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls.span(Matrix.identity(n, field).rows, field, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim or other.field != self.field:
            raise AmbientMismatch("subspaces live in different spaces")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.field, self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """Vectors ``x`` with ``b . x == 0`` for every basis row ``b``."""
        return kernel(self.basis, self.field, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        return (self.annihilator() + other.annihilator()).annihilator()

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        v = [self.field(x) for x in v]
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length mismatch")
        for row, j in zip(self.basis, self.pivots):
            f = v[j]
            if f:
                for k in range(j, self.ambient_dim):
                    if row[k]:
                        v[k] -= f * row[k]
        return tuple(v)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def contains_vector(self, v) -> bool:
        return v in self

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in the RREF basis (``v`` must lie in the span)."""
        if v not in self:
            raise LinalgError("vector not in subspace")
        return tuple(self.field(v[j]) for j in self.pivots)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(b in other for b in self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, {self.field.tag})"


def kernel(rows: Sequence[Sequence], field: Field, ncols: int) -> Subspace:
    """Right null space: vectors ``x`` with ``row . x == 0`` for every row."""
    zero, one = field.zero, field.one
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [j for j in range(ncols) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in zip(red, pivots):
            if r[f]:
                v[pc] = -r[f]
        vecs.append(v)
    return Subspace.span(vecs, field, ncols)


def rref_and_kernel(m: Matrix):
    """``(rref, rank, kernel)`` with ``rank + kernel.dim == m.ncols``."""
    red, pivots = rref(m.rows, m.field) if m.nrows else ([], [])
    return Matrix(red, m.field, ncols=m.ncols), len(pivots), kernel(m.rows, m.field, m.ncols)


def solve(m: Matrix, b: Sequence):
    """One solution ``x`` of ``m @ x == b``, or ``None`` when inconsistent."""
    field = m.field
    n = m.ncols
    aug = [list(r) + [field(bi)] for r, bi in zip(m.rows, b)]
    if not aug:
        return tuple([field.zero] * n)
    red, pivots = rref(aug, field)
    if pivots and pivots[-1] == n:
        return None
    x = [field.zero] * n
    for r, pc in zip(red, pivots):
        x[pc] = r[n]
    return tuple(x)


def eigenspace(m: Matrix, lam) -> Subspace:
    if not m.is_square:
        raise NotSquare(f"eigenspace of a {m.nrows}x{m.ncols} matrix")
    lam = m.field(lam)
    shifted = m - Matrix.identity(m.nrows, m.field).scale(lam)
    return kernel(shifted.rows, m.field, m.ncols)


# Polynomials are coefficient lists, lowest degree first.

def _trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def poly_mul(f, g, field: Field):
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def poly_divmod(f, g, field: Field):
    f, g = _trim(f), _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    lead = g[-1]
    while len(r) >= len(g) and r:
        c = r[-1] / lead
        k = len(r) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] -= c * b
        r = _trim(r)
    return _trim(q), r


def poly_monic(f):
    f = _trim(f)
    if not f:
        return f
    lead = f[-1]
    return [c / lead for c in f]


def poly_gcd(f, g, field: Field):
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, poly_divmod(f, g, field)[1]
    return poly_monic(f)


def poly_lcm(f, g, field: Field):
    if not f or not g:
        return []
    q, _ = poly_divmod(poly_mul(f, g, field), poly_gcd(f, g, field), field)
    return poly_monic(q)


def poly_eval_matrix(f, m: Matrix) -> Matrix:
    """Horner evaluation of ``f`` at the square matrix ``m``."""
    n = m.nrows
    out = Matrix.zeros(n, n, m.field)
    ident = Matrix.identity(n, m.field)
    for c in reversed(_trim(f)):
        out = out @ m + ident.scale(c)
    return out


def minimal_polynomial(m: Matrix) -> list:
    """Monic minimal polynomial of ``m`` (lowest degree first).

    Each standard basis vector contributes the minimal polynomial of its
    Krylov sequence; the answer is their least common multiple.
    """
    if not m.is_square:
        raise NotSquare("minimal polynomial of a non-square matrix")
    field, n = m.field, m.nrows
    mu = [field.one]
    ident = Matrix.identity(n, field)
    for i in range(n):
        v = ident.rows[i]
        # skip vectors already annihilated by the current product
        if not any(poly_eval_matrix(mu, m).apply(v)):
            continue
        krylov = [v]
        while True:
            w = m.apply(krylov[-1])
            coeffs = solve(Matrix.from_columns(krylov, field), w)
            if coeffs is not None:
                local = [-c for c in coeffs] + [field.one]
                break
            krylov.append(w)
        mu = poly_lcm(mu, local, field)
    return mu


@dataclass(frozen=True)
class Definiteness:
    verdict: str
    kernel_dim: int
    positive: int
    negative: int

    def __str__(self):
        return self.verdict


def ldlt_definiteness(g: Matrix) -> Definiteness:
    """Inertia of a symmetric rational matrix by exact symmetric elimination.

    Verdict is one of ``PositiveDefinite``, ``PositiveSemidefinite``,
    ``Indefinite`` or ``NegativeTouching`` (no positive direction, some
    negative one).
    """
    if not g.field.is_rational:
        raise UnsupportedField("definiteness needs an ordered field")
    if not g.is_square:
        raise NotSquare("Gram matrix must be square")
    if not g.is_symmetric():
        raise NotSymmetric("Gram matrix must be symmetric")
    n = g.nrows
    a = [list(r) for r in g.rows]
    active = list(range(n))
    pos = neg = 0
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
            if pair is None:
                break
            # congruence e_i <- e_i + e_j makes the diagonal nonzero
            i, j = pair
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = a[i][k]
            if not f:
                continue
            f = f / d
            for j in active:
                if a[k][j]:
                    a[i][j] -= f * a[k][j]
    zero = n - pos - neg
    if neg == 0:
        verdict = "PositiveDefinite" if zero == 0 else "PositiveSemidefinite"
    elif pos == 0:
        verdict = "NegativeTouching"
    else:
        verdict = "Indefinite"
    return Definiteness(verdict, zero, pos, neg)
