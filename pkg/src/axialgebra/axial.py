"""Axes: Peirce decompositions, fusion verification, Miyamoto involutions and
axis closure."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Algebra, Element
from .linalg import Matrix, Subspace, eigenspace, minimal_polynomial, poly_divmod, solve
from .scalar import Field, Scalar, render_scalar


class AxialError(ValueError):
    pass


class NotIdempotent(AxialError):
    pass


class NotSemisimple(AxialError):
    def __init__(self, msg, deficiency=None, minimal_polynomial=None):
        super().__init__(msg)
        self.deficiency = deficiency
        self.minimal_polynomial = minimal_polynomial


class NotAnAutomorphism(AxialError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class FusionTable:
    """Eigenvalue set with a rule sending each unordered pair to a subset."""

    def __init__(self, eigenvalues: Sequence[Scalar], rule: dict, name: str = ""):
        self.eigenvalues = tuple(eigenvalues)
        self.rule = {}
        for key, cell in rule.items():
            lam, mu = key
            cell = frozenset(cell)
            for x in (lam, mu, *cell):
                if x not in self.eigenvalues:
                    raise AxialError(f"{x} is not in the eigenvalue set")
            self.rule[frozenset((lam, mu))] = cell
        self.name = name

    def cell(self, lam, mu) -> frozenset:
        try:
            return self.rule[frozenset((lam, mu))]
        except KeyError:
            raise AxialError(f"fusion table has no cell for ({lam}, {mu})") from None

    def to_json(self) -> dict:
        cells = {}
        ev = self.eigenvalues
        for i, lam in enumerate(ev):
            for mu in ev[i:]:
                cell = self.rule.get(frozenset((lam, mu)))
                if cell is not None:
                    cells[f"{render_scalar(lam)},{render_scalar(mu)}"] = sorted(
                        render_scalar(x) for x in cell)
        return {"eigenvalues": [render_scalar(x) for x in ev], "rule": cells}

    @classmethod
    def from_json(cls, d: dict, field: Field) -> "FusionTable":
        ev = [field(x) for x in d["eigenvalues"]]
        rule = {}
        for key, cell in d["rule"].items():
            lam, mu = (field(s) for s in key.split(","))
            rule[(lam, mu)] = [field(x) for x in cell]
        return cls(ev, rule)


def jordan_table(eta, field: Field) -> FusionTable:
    one, zero, eta = field.one, field.zero, field(eta)
    if eta in (zero, one):
        raise AxialError("Jordan type needs eta not in {0, 1}")
    return FusionTable((one, zero, eta), {
        (one, one): [one], (one, zero): [], (one, eta): [eta],
        (zero, zero): [zero], (zero, eta): [eta], (eta, eta): [one, zero],
    }, name=f"Jordan({render_scalar(eta)})")


def associative_table(field: Field) -> FusionTable:
    one, zero = field.one, field.zero
    return FusionTable((one, zero), {(one, one): [one], (one, zero): [], (zero, zero): [zero]},
                       name="associative")


@dataclass
class PeirceData:
    axis: tuple
    eigenvalues: tuple
    spaces: dict
    minimal_polynomial: list = dc_field(default_factory=list)

    @property
    def dims(self) -> tuple:
        return tuple(self.spaces[lam].dim for lam in self.eigenvalues)

    @property
    def primitive(self) -> bool:
        one = next(iter(self.spaces.values())).field.one
        return one in self.spaces and self.spaces[one].dim == 1

    def space(self, lam) -> Subspace:
        return self.spaces[lam]

    def sum_of(self, lams) -> Subspace:
        any_space = next(iter(self.spaces.values()))
        out = Subspace.zero(any_space.field, any_space.ambient_dim)
        for lam in lams:
            out = out + self.spaces[lam]
        return out

    def component(self, v, lam) -> tuple:
        """Projection of ``v`` onto the ``lam`` eigenspace along the others."""
        basis = [b for mu in self.eigenvalues for b in self.spaces[mu].basis]
        owner = [mu for mu in self.eigenvalues for _ in self.spaces[mu].basis]
        field = self.spaces[lam].field
        p = Matrix.from_columns(basis, field)
        coeffs = solve(p, v)
        n = len(v)
        out = [field.zero] * n
        for c, b, mu in zip(coeffs, basis, owner):
            if mu == lam and c:
                for k in range(n):
                    out[k] += c * b[k]
        return tuple(out)


def _vec(algebra: Algebra, x):
    return x.coords if isinstance(x, Element) else algebra._as_vector(x)


def peirce_decompose(algebra: Algebra, x, lambda_set: Sequence) -> PeirceData:
    v = _vec(algebra, x)
    if not algebra.is_idempotent(v):
        raise NotIdempotent(f"{Element(algebra, v)!r} is not idempotent")
    field = algebra.field
    lams = []
    for lam in lambda_set:
        lam = field(lam)
        if lam not in lams:
            lams.append(lam)
    ad = algebra.adjoint_matrix(v)
    spaces = {lam: eigenspace(ad, lam) for lam in lams}
    total = sum(s.dim for s in spaces.values())
    if total < algebra.dim:
        mu = minimal_polynomial(ad)
        raise NotSemisimple(
            f"eigenspaces for {[render_scalar(l) for l in lams]} have total dimension "
            f"{total} < {algebra.dim}", deficiency=algebra.dim - total, minimal_polynomial=mu)
    return PeirceData(v, tuple(lams), spaces)


def jordan_peirce(algebra: Algebra, x, eta) -> PeirceData:
    f = algebra.field
    return peirce_decompose(algebra, x, [f.one, f.zero, f(eta)])


def discover_eta(algebra: Algebra, x):
    """Third eigenvalue of ``ad_x`` found by stripping the roots 1 and 0 from its
    minimal polynomial; ``None`` if ``ad_x`` only has eigenvalues 1 and 0."""
    field = algebra.field
    mu = minimal_polynomial(algebra.adjoint_matrix(x))
    for root in (field.one, field.zero):
        q, r = poly_divmod(mu, [-root, field.one], field)
        if not r:
            mu = q
    if len(mu) <= 1:
        return None
    if len(mu) == 2:
        return -mu[0] / mu[1]
    raise AxialError("adjoint has a non-linear factor beyond x(x-1)")


@dataclass
class Violation:
    lam: Scalar
    mu: Scalar
    witness: tuple
    strict_only: bool = False

    def to_json(self) -> dict:
        return {"cell": [render_scalar(self.lam), render_scalar(self.mu)],
                "witness": [render_scalar(c) for c in self.witness],
                "strict_only": self.strict_only}


@dataclass
class FusionReport:
    ok: bool
    violations: list

    def __bool__(self):
        return self.ok


def verify_fusion(algebra: Algebra, pd: PeirceData, table: FusionTable) -> FusionReport:
    """Check every eigenspace basis product against the table, exhaustively.

    A violation of the ``1 * 0`` cell whose product still lies in ``A_0`` is
    flagged ``strict_only`` (it passes the weaker convention ``1 * 0 = {0}``).
    """
    field = algebra.field
    for lam in pd.eigenvalues:
        if lam not in table.eigenvalues and pd.spaces[lam].dim:
            raise AxialError(f"eigenvalue {render_scalar(lam)} missing from the fusion table")
    ev = [lam for lam in pd.eigenvalues if lam in table.eigenvalues]
    one, zero = field.one, field.zero
    violations = []
    for i, lam in enumerate(ev):
        for mu in ev[i:]:
            allowed = pd.sum_of([x for x in table.cell(lam, mu) if x in pd.spaces])
            A, B = pd.spaces[lam].basis, pd.spaces[mu].basis
            for a_i, u in enumerate(A):
                for v in (B[a_i:] if lam == mu else B):
                    w = algebra.multiply_vectors(u, v)
                    if w in allowed:
                        continue
                    strict = {lam, mu} == {one, zero} and zero in pd.spaces and \
                        w in pd.spaces[zero]
                    violations.append(Violation(lam, mu, w, strict))
    return FusionReport(not violations, violations)


def seress_report(algebra: Algebra, pd: PeirceData, trials: int = 20, seed: int = 0) -> dict:
    field = algebra.field
    one, zero = field.one, field.zero
    cells = {}
    if zero in pd.spaces:
        A0 = pd.spaces[zero]
        for lam in pd.eigenvalues:
            if lam == one:
                continue
            L = pd.spaces[lam]
            cells[lam] = all(algebra.multiply_vectors(u, z) in L for u in L.basis for z in A0.basis)
    rng = random.Random(seed)
    p = pd.axis
    plus = pd.sum_of([l for l in (one, zero) if l in pd.spaces])
    assoc = True
    if plus.dim:
        for _ in range(trials):
            x = tuple(field(rng.randint(-3, 3)) for _ in range(algebra.dim))
            y = _random_combination(plus.basis, field, rng)
            mul = algebra.multiply_vectors
            if mul(p, mul(x, y)) != mul(mul(p, x), y):
                assoc = False
                break
    return {"cells": cells, "associativity": assoc,
            "ok": all(cells.values()) and assoc}


def seress_check(algebra: Algebra, pd: PeirceData, trials: int = 20, seed: int = 0) -> bool:
    return seress_report(algebra, pd, trials, seed)["ok"]


def _random_combination(basis, field: Field, rng: random.Random) -> tuple:
    n = len(basis[0])
    out = [field.zero] * n
    for b in basis:
        c = field(rng.randint(-3, 3))
        if c:
            for k in range(n):
                out[k] += c * b[k]
    return tuple(out)


@dataclass
class MiyamotoMap:
    matrix: Matrix
    order: int
    automorphism: bool = True
    witness: tuple | None = None

    def __call__(self, v) -> tuple:
        if isinstance(v, Element):
            return Element(v.algebra, self.matrix.apply(v.coords))
        return self.matrix.apply(v)


def miyamoto(algebra: Algebra, pd: PeirceData, negative_eigenvalues: Sequence,
             check: bool = True) -> MiyamotoMap:
    """Linear map fixing the positive eigenspaces and negating the rest.

    With ``check`` the map must preserve every basis product, otherwise
    :class:`NotAnAutomorphism` is raised carrying the offending basis pair.
    """
    field = algebra.field
    neg = {field(x) for x in negative_eigenvalues}
    if field.one in neg:
        raise AxialError("1 cannot be a negative eigenvalue")
    cols, diag = [], []
    for lam in pd.eigenvalues:
        sign = -field.one if lam in neg else field.one
        for b in pd.spaces[lam].basis:
            cols.append(b)
            diag.append(sign)
    n = algebra.dim
    P = Matrix.from_columns(cols, field)
    PD = Matrix.from_columns([tuple(d * x for x in c) for c, d in zip(cols, diag)], field)
    tau = PD @ P.inverse()
    order = 1 if all(d == field.one for d in diag) else 2
    ident = Matrix.identity(n, field).rows
    images = [tau.column(j) for j in range(n)]
    witness = None
    for i in range(n):
        for j in range(i, n):
            lhs = tau.apply(algebra.multiply_vectors(ident[i], ident[j]))
            if lhs != algebra.multiply_vectors(images[i], images[j]):
                witness = (i, j)
                break
        if witness:
            break
    if witness and check:
        raise NotAnAutomorphism(f"basis pair {witness} is not respected", witness)
    return MiyamotoMap(tau, order, witness is None, witness)


def jordan_miyamoto(algebra: Algebra, x, eta, check: bool = True) -> MiyamotoMap:
    pd = jordan_peirce(algebra, x, eta)
    return miyamoto(algebra, pd, [eta], check=check)


@dataclass
class AxisClosure:
    axes: list
    complete: bool
    taus: list

    def __len__(self):
        return len(self.axes)


def axis_closure(algebra: Algebra, eta=None, cap: int = 512, axes=None) -> AxisClosure:
    """Close the axis set under the Miyamoto involutions of all axes found.

    Stops as soon as more than ``cap`` axes are known, with ``complete=False``.
    """
    field = algebra.field
    eta = field(eta) if eta is not None else algebra.eta
    if eta is None:
        raise AxialError("axis closure needs eta")
    start = [_vec(algebra, a) for a in (axes if axes is not None else algebra.axes)]
    found, seen = [], set()
    for v in start:
        if v not in seen:
            seen.add(v)
            found.append(v)
    taus = []
    progress = {}  # first axis index each tau has not yet acted on
    a = 0
    while a < len(found):
        if a == len(taus):
            taus.append(jordan_miyamoto(algebra, found[a], eta))
        # let every known tau act on everything known so far, round-robin
        changed = True
        while changed:
            changed = False
            for t_idx in range(len(taus)):
                start_b = progress.get(t_idx, 0)
                for b in range(start_b, len(found)):
                    img = taus[t_idx].matrix.apply(found[b])
                    if img not in seen:
                        seen.add(img)
                        found.append(img)
                        changed = True
                        if len(found) > cap:
                            return AxisClosure(found, False, taus)
                progress[t_idx] = len(found)
        a += 1
    return AxisClosure(found, True, taus)


def span_check(algebra: Algebra, axes) -> bool:
    """Whether ``axes`` span the subalgebra generated by the designated axes."""
    return algebra.span(axes) == algebra.generated_subalgebra(algebra.axes)


def fusion_verdicts(algebra: Algebra, table: FusionTable) -> dict:
    """Peirce dimensions, primitivity and fusion violations at every designated
    axis, rendered as plain JSON data."""
    per_axis = []
    ok = primitive = True
    for a in algebra.axes:
        entry = {"axis": [render_scalar(x) for x in a]}
        try:
            pd = peirce_decompose(algebra, a, table.eigenvalues)
        except (NotIdempotent, NotSemisimple) as exc:
            entry.update(error=type(exc).__name__, message=str(exc))
            ok = primitive = False
            per_axis.append(entry)
            continue
        rep = verify_fusion(algebra, pd, table)
        entry["dims"] = {render_scalar(lam): d for lam, d in zip(pd.eigenvalues, pd.dims)}
        entry["primitive"] = pd.primitive
        entry["violations"] = len(rep.violations)
        if rep.violations:
            entry["witness"] = rep.violations[0].to_json()
        ok = ok and rep.ok
        primitive = primitive and pd.primitive
        per_axis.append(entry)
    return {"table": table.name, "fusion": ok, "primitive": primitive, "axes": per_axis}
