"""Matsuo algebras of partial triple systems and their canonical Frobenius forms."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .axial import axis_closure, fusion_verdicts, jordan_table
from .bilinear import GramForm, radical, solve_associative_forms
from .groups import ClosureNotInvariant, miyamoto_group
from .geometry import PartialTripleSystem, connected_components, fischer_check, restrict
from .linalg import Matrix, Subspace, UnsupportedField
from .scalar import QQ, Field, render_scalar


class MatsuoError(ValueError):
    pass


class BadParameters(MatsuoError):
    pass


class InvalidGeometry(MatsuoError):
    pass


class CrossCheckMismatch(MatsuoError):
    pass


@dataclass(frozen=True)
class MatsuoParameters:
    """Callers give ``eta``; the structure constant ``delta`` is ``eta / 2``."""

    eta: object
    field: Field = QQ

    def __post_init__(self):
        eta = self.field(self.eta)
        if eta == 0 or eta == 1:
            raise BadParameters("eta must differ from 0 and 1")
        object.__setattr__(self, "eta", eta)

    @property
    def delta(self):
        return self.eta / 2


@dataclass
class NoForm:
    """No nonzero associative form; ``witnesses`` name the failing configuration."""

    witnesses: dict

    def __bool__(self):
        return False


def build(pts: PartialTripleSystem, params: MatsuoParameters) -> Algebra:
    try:
        pts.validate()
    except ValueError as exc:
        raise InvalidGeometry(str(exc)) from exc
    field, n, h = params.field, pts.n, params.delta
    products = {}
    for p in range(n):
        vec = [field.zero] * n
        vec[p] = field.one
        products[(p, p)] = vec
    for line in pts.lines:
        for p, r, s in ((line[0], line[1], line[2]), (line[0], line[2], line[1]),
                        (line[1], line[2], line[0])):
            vec = [field.zero] * n
            vec[p], vec[r], vec[s] = h, h, -h
            products[(p, r)] = vec
    alg = Algebra(field, [f"a_{x}" for x in pts.points], products, axes=range(n),
                  eta=params.eta, name=f"Matsuo({render_scalar(params.eta)})")
    alg.geometry = pts
    return alg


def frobenius_conditions(pts: PartialTripleSystem) -> dict:
    """(i) every ``x``-perp is a subspace; (ii) for lines ``{x, y, z}`` and
    ``{x, v, w}``, the second misses ``y``-perp iff it misses ``z``-perp."""
    perps = [pts.perp(x) for x in range(pts.n)]
    wit_i = wit_ii = None
    for x in range(pts.n):
        for line in pts.lines:
            inside = [p for p in line if p in perps[x]]
            if len(inside) == 2:
                wit_i = {"point": pts.points[x], "line": pts.label_line(line)}
                break
        if wit_i:
            break
    for x in range(pts.n):
        through = pts.lines_on(x)
        for l1 in through:
            y, z = (p for p in l1 if p != x)
            for l2 in through:
                if l2 == l1:
                    continue
                miss_y = not perps[y] & set(l2)
                miss_z = not perps[z] & set(l2)
                if miss_y != miss_z:
                    wit_ii = {"line": pts.label_line(l1), "other": pts.label_line(l2)}
                    break
            if wit_ii:
                break
        if wit_ii:
            break
    return {"cond_i": wit_i is None, "cond_ii": wit_ii is None,
            "witnesses": {"cond_i": wit_i, "cond_ii": wit_ii}}


def canonical_gram(pts: PartialTripleSystem, eta, field: Field) -> Matrix:
    """``I + (eta/2) D`` with ``D`` the collinearity matrix."""
    h = field(eta) / 2
    rows = [[field.one if p == q else (h if pts.collinear(p, q) else field.zero)
             for q in range(pts.n)] for p in range(pts.n)]
    return Matrix(rows, field)


def canonical_form(alg: Algebra, pts: PartialTripleSystem, params: MatsuoParameters,
                   cross_check: bool = True):
    """The form with unit axis norms and ``eta/2`` on collinear pairs, or
    :class:`NoForm`. Every component is tested separately; the solver must
    agree with the conditions on each of them."""
    failed = {}
    for comp in connected_components(pts):
        sub = restrict(pts, comp)
        cond = frobenius_conditions(sub)
        ok = cond["cond_i"] and cond["cond_ii"]
        if cross_check:
            sub_alg = build(sub, params)
            dim = len(solve_associative_forms(sub_alg, normalize=False))
            if ok != (dim == 1):
                raise CrossCheckMismatch(
                    f"conditions say {ok} but the solver finds {dim} forms on {sub.points}")
        if not ok:
            failed.update({k: v for k, v in cond["witnesses"].items() if v})
    if failed:
        return NoForm(failed)
    return GramForm(alg, canonical_gram(pts, params.eta, params.field))


def component_split(alg: Algebra, pts: PartialTripleSystem) -> list:
    """One subalgebra per connected component, after checking that distinct
    components multiply to zero."""
    comps = connected_components(pts)
    for i, c in enumerate(comps):
        for d in comps[i + 1:]:
            for p in c:
                for q in d:
                    if any(alg.product(p, q)):
                        raise MatsuoError(f"components meet in product ({p}, {q})")
    out = []
    for c in comps:
        idx = sorted(c)
        space = Subspace.span([alg.basis(p).coords for p in idx], alg.field, alg.dim)
        sub = alg.subalgebra(space, names=[alg.basis_names[p] for p in idx])
        sub.name = alg.name
        out.append(sub)
    return out


def definiteness_report(form, eta) -> dict | None:
    """LDLt verdict on the Gram matrix; for positive ``eta`` this is the exact
    comparison of the least adjacency eigenvalue with ``-2/eta``."""
    if not form:
        return None
    try:
        d = form.definiteness()
    except UnsupportedField:
        return None
    out = {"verdict": d.verdict, "positive": d.positive, "negative": d.negative,
           "kernel_dim": d.kernel_dim}
    if eta > 0:
        out["threshold"] = render_scalar(-2 / eta)
        out["min_adjacency_eigenvalue_above_threshold"] = d.verdict == "PositiveDefinite"
    return out


def report(alg: Algebra, pts: PartialTripleSystem, params: MatsuoParameters,
           miyamoto: bool = True) -> dict:
    verdicts = fusion_verdicts(alg, jordan_table(params.eta, params.field))
    cond = frobenius_conditions(pts)
    form = canonical_form(alg, pts, params)
    out = {
        "dim": alg.dim,
        "eta": render_scalar(params.eta),
        "field": params.field.tag,
        "fischer": fischer_check(pts).is_fischer,
        "jordan": verdicts["fusion"] and verdicts["primitive"],
        "verdicts": verdicts,
        "frobenius_conditions": cond,
        "form": "present" if form else "absent",
        "components": len(connected_components(pts)),
    }
    if form:
        out["gram"] = [[render_scalar(x) for x in row] for row in form.gram.rows]
        out["radical_dim"] = radical(form).dim
        dr = definiteness_report(form, params.eta)
        out["definiteness"] = dr
        out["definite"] = None if dr is None else dr["verdict"]
    if miyamoto and out["jordan"]:
        try:
            clo = axis_closure(alg, params.eta)
            mg = miyamoto_group(alg, clo, params.eta)
            out["miyamoto"] = {"axes": len(clo), "complete": clo.complete, "order": mg.order,
                               "three_transpositions": mg.check.ok if mg.check else None,
                               "bijective_tau": mg.bijective_tau}
        except ClosureNotInvariant as exc:
            out["miyamoto"] = {"error": str(exc)}
    return out
