"""Two-generated algebras of Jordan type: the universal algebra B(eta, phi),
invariants of an axis pair, the pair classifier and the small catalog."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Algebra, AlgebraError, Element
from .axial import AxialError, jordan_miyamoto, jordan_peirce
from .linalg import Subspace
from .scalar import QQ, Field, Scalar, render_scalar


class DihedralError(ValueError):
    pass


class BadEta(DihedralError):
    pass


class BadParameters(DihedralError):
    pass


class NotJordanPair(DihedralError):
    pass


class UnclassifiedPair(DihedralError):
    pass


def _check_eta(eta, field: Field):
    eta = field(eta)
    if eta == 0 or eta == 1:
        raise BadEta("eta must differ from 0 and 1")
    return eta


# -- catalog ------------------------------------------------------------------

def one_a(field: Field = QQ) -> Algebra:
    return Algebra(field, ["z0"], {(0, 0): [1]}, axes=[0], name="1A")


def two_b(field: Field = QQ, eta=None) -> Algebra:
    return Algebra(field, ["b0", "b1"], {(0, 0): [1, 0], (1, 1): [0, 1]}, axes=[0, 1],
                   eta=eta, name="2B")


def three_c(eta, field: Field = QQ) -> Algebra:
    """Basis c0, c1, c2 with c_i^2 = c_i and c_i c_j = eta/2 (c_i + c_j - c_k)."""
    eta = _check_eta(eta, field)
    h = eta / 2
    products = {(i, i): [1 if k == i else 0 for k in range(3)] for i in range(3)}
    for i, j in ((0, 1), (0, 2), (1, 2)):
        k = 3 - i - j
        vec = [field.zero] * 3
        vec[i], vec[j], vec[k] = h, h, -h
        products[(i, j)] = vec
    return Algebra(field, ["c0", "c1", "c2"], products, axes=[0, 1], eta=eta,
                   name=f"3C({render_scalar(eta)})")


def three_c_star(field: Field = QQ) -> Algebra:
    """The quotient of 3C(-1) by its radical: d0 d1 = d2 = -d0 - d1."""
    return Algebra(field, ["d0", "d1"], {(0, 0): [1, 0], (1, 1): [0, 1], (0, 1): [-1, -1]},
                   axes=[0, 1], eta=-1, name="3C(-1)*")


def spin_factor(gram, field: Field = QQ, axes=None) -> Algebra:
    """F1 + V with (a + v)(b + w) = (ab + b(v, w)/2) 1 + a w + b v.

    Default axes are (1 + v_i)/2 for every basis vector with b(v_i, v_i) = 2;
    supplied axes are coordinate vectors on the basis (1, v_0, ...) and must
    be idempotent.
    """
    g = [[field(x) for x in row] for row in gram]
    k = len(g)
    if any(len(r) != k for r in g) or any(g[i][j] != g[j][i] for i in range(k) for j in range(k)):
        raise BadParameters("spin factor needs a symmetric square Gram matrix")
    n = k + 1
    unit = [1] + [0] * k
    products = {(0, 0): unit}
    for i in range(k):
        products[(0, i + 1)] = [1 if t == i + 1 else 0 for t in range(n)]
        for j in range(i, k):
            products[(i + 1, j + 1)] = [g[i][j] / 2] + [0] * k
    names = ["1"] + [f"v{i}" for i in range(k)]
    if axes is None:
        half = field(1) / 2
        axes = []
        for i in range(k):
            if g[i][i] == 2:
                v = [field.zero] * n
                v[0] = v[i + 1] = half
                axes.append(v)
    alg = Algebra(field, names, products, axes=axes, eta=field(1) / 2, name="SpinFactor")
    for a in alg.axes:
        if not alg.is_idempotent(a):
            raise BadParameters(f"axis {Element(alg, a)!r} is not idempotent")
    return alg


def spin_factor_delta(delta, field: Field = QQ) -> Algebra:
    """Spin factor on F^2 with b(v_i, v_i) = 2 and b(v_0, v_1) = delta."""
    delta = field(delta)
    alg = spin_factor([[2, delta], [delta, 2]], field)
    alg.name = f"SpinFactor({render_scalar(delta)})"
    return alg


def cl0(field: Field = QQ) -> Algebra:
    half = field(1) / 2
    return Algebra(field, ["e0", "e1"], {(0, 0): [1, 0], (1, 1): [0, 1], (0, 1): [half, half]},
                   axes=[0, 1], eta=half, name="Cl0")


def cl00(field: Field = QQ) -> Algebra:
    half = field(1) / 2
    return Algebra(field, ["e0'", "e1'", "s'"],
                   {(0, 0): [1, 0, 0], (1, 1): [0, 1, 0], (0, 1): [half, half, 1]},
                   axes=[0, 1], eta=half, name="Cl00")


CATALOG_NAMES = ("1A", "2B", "3C", "3C*", "spin", "Cl0", "Cl00")


def catalog(name: str, field: Field = QQ, eta=None, delta=None, gram=None) -> Algebra:
    key = name.strip().lower()
    try:
        if key in ("1a", "onea"):
            return one_a(field)
        if key in ("2b", "twob"):
            return two_b(field, eta=eta)
        if key in ("3c", "threec"):
            if eta is None:
                raise BadParameters("3C needs eta")
            return three_c(eta, field)
        if key in ("3c*", "3cstar", "threecstar", "3c(-1)*"):
            return three_c_star(field)
        if key in ("spin", "spinfactor"):
            if gram is not None:
                return spin_factor(gram, field)
            if delta is None:
                raise BadParameters("spin factor needs delta or a Gram matrix")
            return spin_factor_delta(delta, field)
        if key == "cl0":
            return cl0(field)
        if key == "cl00":
            return cl00(field)
    except (AlgebraError, BadEta) as exc:
        raise BadParameters(str(exc)) from exc
    raise BadParameters(f"unknown catalog algebra {name!r}; choose from {CATALOG_NAMES}")


# -- the universal algebra ---------------------------------------------------------

def pi_of(eta, phi):
    return (1 - eta) * phi - eta


def build_B(eta, phi, field: Field = QQ) -> Algebra:
    """B(eta, phi) on the basis c, d, rho.

    The Peirce bases of both axes are kept in ``algebra.peirce_bases``.
    """
    eta = _check_eta(eta, field)
    phi = field(phi)
    pi = pi_of(eta, phi)
    products = {
        (0, 0): [1, 0, 0], (1, 1): [0, 1, 0], (0, 1): [eta, eta, 1],
        (0, 2): [pi, 0, 0], (1, 2): [0, pi, 0], (2, 2): [0, 0, pi],
    }
    alg = Algebra(field, ["c", "d", "rho"], products, axes=[0, 1], eta=eta,
                  name=f"B({render_scalar(eta)},{render_scalar(phi)})")
    alg.phi = phi
    alg.peirce_bases = {
        "c": {"1": (1, 0, 0), "0": (pi, 0, -1), "eta": (eta - phi, eta, 1)},
        "d": {"1": (0, 1, 0), "0": (0, pi, -1), "eta": (eta, eta - phi, 1)},
    }
    alg.peirce_bases = {p: {k: tuple(field(x) for x in v) for k, v in d.items()}
                        for p, d in alg.peirce_bases.items()}
    return alg


def jordan_quotient_condition(eta, phi, field: Field = QQ) -> str:
    """``JordanGeneric`` when eta (2 eta - 1)(eta - 2 phi) vanishes, else
    ``JordanOnlyIfAssociativeQuotient``."""
    eta = _check_eta(eta, field)
    phi = field(phi)
    coeff = eta * (2 * eta - 1) * (eta - 2 * phi)
    return "JordanGeneric" if coeff == 0 else "JordanOnlyIfAssociativeQuotient"


def b_ideals(eta, phi, field: Field = QQ) -> list:
    """The proper nonzero ideals of B(eta, phi) (empty when it is simple)."""
    alg = build_B(eta, phi, field)
    eta, phi = alg.eta, alg.phi
    pi = pi_of(eta, phi)
    out = []
    if phi == eta / (1 - eta):
        out.append(([(0, 0, 1)], "B_0(c) = B_0(d) = F rho"))
    if phi == 0:
        g = (eta, eta, 1)
        out.append(([g], "B_eta(c) = B_eta(d) = F(eta c + eta d + rho)"))
        out.append(([(0, 1, 0), g], "B_0(c) + B_eta(c) = F d + F(eta c + eta d + rho)"))
        out.append(([(1, 0, 0), g], "B_0(d) + B_eta(d) = F c + F(eta c + eta d + rho)"))
    if phi == 1:
        out.append(([(pi, 0, -1), (eta - 1, eta, 1)], "B_0(c) + B_eta(c) = B_0(d) + B_eta(d)"))
    result = []
    for vecs, desc in out:
        space = alg.span(vecs)
        if not alg.is_ideal(space) or alg.ideal_closure(vecs) != space:
            raise DihedralError(f"expected ideal failed verification: {desc}")
        result.append((space, desc))
    return result


# -- invariants of a pair of axes --------------------------------------------------

@dataclass
class DihedralInvariants:
    eta: Scalar
    phi: Scalar
    pi: Scalar
    sigma: tuple

    def to_json(self) -> dict:
        return {"eta": render_scalar(self.eta), "phi": render_scalar(self.phi),
                "pi": render_scalar(self.pi), "sigma": [render_scalar(x) for x in self.sigma]}


def _vec(algebra, x):
    return x.coords if isinstance(x, Element) else algebra._as_vector(x)


def _scalar_multiple(v, base):
    """``t`` with ``v == t * base``; ``base`` must be nonzero."""
    k = next(i for i, x in enumerate(base) if x)
    t = v[k] / base[k]
    if tuple(t * b for b in base) != tuple(v):
        raise AxialError("vector is not a multiple of the axis")
    return t


def phi_component(algebra: Algebra, x, y, eta) -> Scalar:
    """Coefficient of ``x`` when ``y`` is split over the Peirce decomposition of ``x``."""
    xv, yv = _vec(algebra, x), _vec(algebra, y)
    pd = jordan_peirce(algebra, xv, eta)
    comp = pd.component(yv, algebra.field.one)
    if not any(comp):
        return algebra.field.zero
    return _scalar_multiple(comp, xv)


def extract_invariants(algebra: Algebra, x, y, eta) -> DihedralInvariants:
    field = algebra.field
    eta = field(eta)
    xv, yv = _vec(algebra, x), _vec(algebra, y)
    mul = algebra.multiply_vectors
    try:
        xy = mul(xv, yv)
        if not any(xy):
            phi = field.zero
        else:
            phi = phi_component(algebra, xv, yv, eta)
            if phi != phi_component(algebra, yv, xv, eta):
                raise NotJordanPair("phi_x(y) differs from phi_y(x)")
    except AxialError as exc:
        raise NotJordanPair(str(exc)) from exc
    sigma = tuple(p - eta * a - eta * b for p, a, b in zip(xy, xv, yv))
    pi = pi_of(eta, phi)

    def scaled(c, v):
        return tuple(c * t for t in v)

    if mul(sigma, sigma) != scaled(pi, sigma):
        raise NotJordanPair("sigma^2 != pi sigma")
    if mul(xv, sigma) != scaled(pi, xv) or mul(yv, sigma) != scaled(pi, yv):
        raise NotJordanPair("x sigma != pi x or y sigma != pi y")
    return DihedralInvariants(eta, phi, pi, sigma)


# -- classification ---------------------------------------------------------------

@dataclass
class TwoGenClass:
    kind: str  # 1A, 2B, 3C, 3C*, SpinFactor, Cl0, Cl00
    dim: int
    params: dict = dc_field(default_factory=dict)
    invariants: DihedralInvariants | None = None
    coincidence: list = dc_field(default_factory=list)

    @property
    def name(self) -> str:
        """Catalog-style name such as ``3C(1/4)`` or ``3C(-1)*``."""
        if self.kind == "3C":
            return f"3C({render_scalar(self.params['eta'])})"
        if self.kind == "3C*":
            return "3C(-1)*"
        if self.kind == "SpinFactor":
            return f"SpinFactor({render_scalar(self.params['delta'])})"
        return self.kind

    @property
    def label(self) -> str:
        """Class label: Type1A, Type2B, Type3C(eta), Type3Cstar, SpinFactor(delta),
        Cl0 or Cl00."""
        if self.kind == "3C*":
            return "Type3Cstar"
        if self.kind in ("1A", "2B", "3C"):
            return "Type" + self.name
        return self.name

    def __str__(self):
        return self.label


def _model(kind: str, field: Field, eta, phi):
    """Catalog algebra of the given kind with its marked axis pair and basis
    (x, y[, sigma]) used for the structure-constant comparison."""
    if kind == "1A":
        alg = one_a(field)
        return alg, [alg.axes[0]]
    if kind == "2B":
        alg = two_b(field)
        return alg, list(alg.axes)
    if kind == "3C*":
        alg = three_c_star(field)
        return alg, list(alg.axes)
    if kind == "Cl0":
        alg = cl0(field)
        return alg, list(alg.axes)
    if kind == "3C":
        alg = three_c(eta, field)
    elif kind == "SpinFactor":
        alg = spin_factor_delta(4 * phi - 2, field)
    elif kind == "Cl00":
        alg = cl00(field)
    else:
        raise UnclassifiedPair(kind)
    x, y = alg.axes[:2]
    xy = alg.multiply_vectors(x, y)
    sigma = tuple(p - eta * a - eta * b for p, a, b in zip(xy, x, y))
    return alg, [x, y, sigma]


def classify_pair(algebra: Algebra, x, y, eta) -> TwoGenClass:
    """Identify the subalgebra generated by the marked pair ``(x, y)``.

    Every candidate label is confirmed by comparing structure constants on
    the basis (x, y, sigma) with those of the catalog model; labels whose
    models also match are listed in ``coincidence``.
    """
    field = algebra.field
    eta = field(eta)
    xv, yv = _vec(algebra, x), _vec(algebra, y)
    inv = extract_invariants(algebra, xv, yv, eta)
    sub = algebra.generated_subalgebra([xv, yv])
    dim = sub.dim
    xy = algebra.multiply_vectors(xv, yv)
    half = field(1) / 2
    phi = inv.phi
    candidates = []
    if dim == 1:
        candidates.append(("1A", {}))
    elif dim == 2:
        if not any(xy):
            candidates.append(("2B", {}))
        else:
            if eta == -1:
                candidates.append(("3C*", {"eta": eta}))
            if eta == half:
                candidates.append(("Cl0", {"eta": eta}))
    elif dim == 3:
        if eta == half:
            if phi == 1:
                candidates.append(("Cl00", {"eta": eta, "phi": phi}))
            else:
                candidates.append(("SpinFactor", {"eta": eta, "phi": phi, "delta": 4 * phi - 2}))
        if phi == eta / 2:
            candidates.append(("3C", {"eta": eta, "phi": phi}))
    if dim == 1:
        basis = [xv]
    elif dim == 2:
        basis = [xv, yv]
    else:
        basis = [xv, yv, inv.sigma]
    matches = []
    for kind, params in candidates:
        model, mbasis = _model(kind, field, eta, phi)
        try:
            ours = algebra.rebase(basis)
            theirs = model.rebase(mbasis)
        except AlgebraError:
            continue
        if ours.same_structure(theirs):
            matches.append((kind, params))
    if dim == 3 and matches:
        b_model = build_B(eta, phi, field)
        if not algebra.rebase(basis).same_structure(b_model):
            matches = []
    if not matches:
        raise UnclassifiedPair(f"no catalog model matches (dim {dim}, phi {render_scalar(phi)})")
    kind, params = matches[0]
    others = []
    for k, p in matches[1:]:
        others.append(TwoGenClass(k, dim, p).label)
    return TwoGenClass(kind, dim, params, inv, others)


def third_axis(algebra: Algebra, x, y, eta) -> tuple:
    """Image of ``y`` under the Miyamoto involution of ``x``."""
    return jordan_miyamoto(algebra, _vec(algebra, x), eta).matrix.apply(_vec(algebra, y))
