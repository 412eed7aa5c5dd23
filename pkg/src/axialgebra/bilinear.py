"""Associative (Frobenius) bilinear forms on an algebra."""
from __future__ import annotations

from typing import Sequence

from .algebra import Algebra, Element
from .axial import PeirceData
from .linalg import Definiteness, Matrix, Subspace, kernel, ldlt_definiteness


class FormError(ValueError):
    pass


class NotAssociative(FormError):
    pass


class RadicalNotIdeal(FormError):
    pass


def _pair(gram_rows, x, y):
    total = None
    for i, a in enumerate(x):
        if not a:
            continue
        row = gram_rows[i]
        for j, b in enumerate(y):
            if b and row[j]:
                t = a * row[j] * b
                total = t if total is None else total + t
    return total


class GramForm:
    """Symmetric bilinear form on ``algebra`` with ``<xz, y> = <x, zy>``.

    Both properties are checked over all basis triples on construction.
    """

    def __init__(self, algebra: Algebra, gram, check: bool = True):
        self.algebra = algebra
        self.gram = gram if isinstance(gram, Matrix) else Matrix(gram, algebra.field)
        if self.gram.shape != (algebra.dim, algebra.dim):
            raise FormError("Gram matrix has the wrong shape")
        if check:
            if not self.gram.is_symmetric():
                raise FormError("Gram matrix is not symmetric")
            bad = associativity_defect(algebra, self.gram)
            if bad is not None:
                raise NotAssociative(f"<e_i e_k, e_j> != <e_i, e_k e_j> for (i, j, k) = {bad}")

    def __call__(self, x, y):
        xv = x.coords if isinstance(x, Element) else x
        yv = y.coords if isinstance(y, Element) else y
        val = _pair(self.gram.rows, xv, yv)
        return self.algebra.field.zero if val is None else val

    def scaled(self, c) -> "GramForm":
        return GramForm(self.algebra, self.gram.scale(c), check=False)

    def is_zero(self) -> bool:
        return not any(x for r in self.gram.rows for x in r)

    def definiteness(self) -> Definiteness:
        return ldlt_definiteness(self.gram)

    def __repr__(self):
        return f"GramForm({self.gram!r})"


def associativity_defect(algebra: Algebra, gram: Matrix):
    """First basis triple ``(i, j, k)`` violating associativity, or ``None``."""
    n = algebra.dim
    g = gram.rows
    cols = list(zip(*g))
    for i in range(n):
        for k in range(n):
            left = algebra.product(i, k)
            for j in range(n):
                right = algebra.product(k, j)
                lhs = sum((c * cols[j][m] for m, c in enumerate(left) if c), algebra.field.zero)
                rhs = sum((c * g[i][m] for m, c in enumerate(right) if c), algebra.field.zero)
                if lhs != rhs:
                    return (i, j, k)
    return None


def solve_associative_forms(algebra: Algebra, normalize: bool = True) -> list:
    """Basis of the space of symmetric associative forms.

    The unknowns are the Gram entries ``g_ij`` with ``i <= j``; every basis
    triple contributes one linear equation. A one-dimensional answer is
    rescaled so that the first axis of nonzero norm has norm 1.
    """
    field = algebra.field
    n = algebra.dim
    index = {}
    for i in range(n):
        for j in range(i, n):
            index[(i, j)] = len(index)

    def var(i, j):
        return index[(i, j) if i <= j else (j, i)]

    rows = set()
    zero = field.zero
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                eq = {}
                for m, c in enumerate(algebra.product(i, k)):
                    if c:
                        v = var(m, j)
                        eq[v] = eq.get(v, zero) + c
                for m, c in enumerate(algebra.product(k, j)):
                    if c:
                        v = var(i, m)
                        eq[v] = eq.get(v, zero) - c
                eq = {v: c for v, c in eq.items() if c}
                if eq:
                    row = [zero] * len(index)
                    for v, c in eq.items():
                        row[v] = c
                    rows.add(tuple(row))
    sol = kernel(list(rows), field, len(index))
    forms = []
    for vec in sol.basis:
        g = [[vec[var(i, j)] for j in range(n)] for i in range(n)]
        forms.append(GramForm(algebra, Matrix(g, field)))
    if normalize and len(forms) == 1:
        f = forms[0]
        for a in algebra.axes:
            norm = f(a, a)
            if norm:
                forms = [f.scaled(1 / norm)]
                break
    for f in forms:
        assert f.gram.is_symmetric()
    return forms


def radical(form: GramForm) -> Subspace:
    alg = form.algebra
    rad = kernel(form.gram.rows, alg.field, alg.dim)
    if not alg.is_ideal(rad):
        raise RadicalNotIdeal("radical of the form is not an ideal")
    return rad


def eigenspace_orthogonality(form: GramForm, pd: PeirceData) -> bool:
    ev = pd.eigenvalues
    for a, lam in enumerate(ev):
        for mu in ev[a + 1:]:
            for u in pd.spaces[lam].basis:
                for v in pd.spaces[mu].basis:
                    if form(u, v):
                        return False
    return True


def combine(forms: Sequence[GramForm], coeffs) -> GramForm:
    """Linear combination of forms on the same algebra."""
    alg = forms[0].algebra
    out = Matrix.zeros(alg.dim, alg.dim, alg.field)
    for f, c in zip(forms, coeffs):
        out = out + f.gram.scale(c)
    return GramForm(alg, out, check=False)
