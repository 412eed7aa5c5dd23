"""Partial triple systems (partial linear spaces of order two)."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence


class GeometryError(ValueError):
    pass


class DuplicateLine(GeometryError):
    pass


class PairOnTwoLines(GeometryError):
    pass


class BadLineSize(GeometryError):
    pass


class PartialTripleSystem:
    """Points with labels and lines stored as sorted index triples."""

    def __init__(self, points: Sequence[str], lines: Iterable[Iterable]):
        self.points = [str(p) for p in points]
        index = {p: i for i, p in enumerate(self.points)}
        if len(index) != len(self.points):
            raise GeometryError("point labels must be distinct")
        self.index = index
        raw = []
        for line in lines:
            idx = []
            for p in line:
                if isinstance(p, int) and not isinstance(p, bool):
                    if not 0 <= p < len(self.points):
                        raise GeometryError(f"point index {p} out of range")
                    idx.append(p)
                else:
                    if str(p) not in index:
                        raise GeometryError(f"unknown point {p!r}")
                    idx.append(index[str(p)])
            raw.append(tuple(sorted(idx)))
        self.lines = raw
        self._line_of = None

    @property
    def n(self) -> int:
        return len(self.points)

    def _pairs(self):
        if self._line_of is None:
            self.validate()
        return self._line_of

    def validate(self) -> dict:
        """Check both axioms; raise on failure, else report the Steiner property."""
        seen = set()
        line_of = {}
        for line in self.lines:
            if len(line) != 3 or len(set(line)) != 3:
                raise BadLineSize(f"line {self.label_line(line)} does not have 3 distinct points")
            if line in seen:
                raise DuplicateLine(f"line {self.label_line(line)} occurs twice")
            seen.add(line)
            for p, q in itertools.combinations(line, 2):
                if (p, q) in line_of:
                    raise PairOnTwoLines(
                        f"points {self.points[p]}, {self.points[q]} lie on two lines")
                line_of[(p, q)] = line
        self._line_of = line_of
        npairs = self.n * (self.n - 1) // 2
        return {"valid": True, "steiner": len(line_of) == npairs,
                "points": self.n, "lines": len(self.lines)}

    def label_line(self, line) -> list:
        return [self.points[i] for i in line]

    def line_through(self, p: int, q: int):
        if p > q:
            p, q = q, p
        return self._pairs().get((p, q))

    def collinear(self, p: int, q: int) -> bool:
        return p != q and self.line_through(p, q) is not None

    def third_point(self, p: int, q: int):
        line = self.line_through(p, q)
        if line is None:
            return None
        return next(r for r in line if r != p and r != q)

    def perp(self, p: int) -> set:
        """Points distinct from ``p`` and not collinear with it."""
        return {q for q in range(self.n) if q != p and not self.collinear(p, q)}

    def lines_on(self, p: int) -> list:
        return [line for line in self.lines if p in line]

    def is_steiner(self) -> bool:
        return self.validate()["steiner"]

    def degree_sequence(self) -> tuple:
        deg = [0] * self.n
        for line in self.lines:
            for p in line:
                deg[p] += 1
        return tuple(sorted(deg))

    def invariants(self) -> tuple:
        return (self.n, len(self.lines), self.degree_sequence())

    def to_json(self) -> dict:
        return {"points": list(self.points), "lines": [self.label_line(l) for l in self.lines]}

    @classmethod
    def from_json(cls, d: dict) -> "PartialTripleSystem":
        try:
            pts = cls(d["points"], d["lines"])
        except (KeyError, TypeError) as exc:
            raise GeometryError(f"malformed geometry JSON: {exc}") from exc
        pts.validate()
        return pts

    def __repr__(self):
        return f"<PartialTripleSystem {self.n} points, {len(self.lines)} lines>"


def validate(pts: PartialTripleSystem) -> dict:
    return pts.validate()


def connected_components(pts: PartialTripleSystem) -> list:
    parent = list(range(pts.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c in pts.lines:
        for u, v in ((a, b), (a, c)):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    comps = {}
    for p in range(pts.n):
        comps.setdefault(find(p), []).append(p)
    return [frozenset(c) for c in sorted(comps.values())]


def subspace_closure(pts: PartialTripleSystem, seed: Iterable[int]) -> frozenset:
    """Least superset of ``seed`` containing every line it meets twice."""
    closed = set(seed)
    queue = list(closed)
    while queue:
        p = queue.pop()
        for q in list(closed):
            r = pts.third_point(p, q)
            if r is not None and r not in closed:
                closed.add(r)
                queue.append(r)
    return frozenset(closed)


def restrict(pts: PartialTripleSystem, subset) -> PartialTripleSystem:
    """The induced system on ``subset``, keeping the original point order."""
    keep = sorted(set(subset))
    pos = {p: i for i, p in enumerate(keep)}
    lines = [tuple(pos[p] for p in l) for l in pts.lines if all(p in pos for p in l)]
    return PartialTripleSystem([pts.points[p] for p in keep], lines)


def is_subspace(pts: PartialTripleSystem, subset) -> bool:
    s = set(subset)
    return all(sum(p in s for p in line) < 2 or set(line) <= s for line in pts.lines)


@dataclass
class PlaneReport:
    generating_lines: tuple
    points: frozenset
    lines: list
    classification: str

    def to_json(self, pts: PartialTripleSystem) -> dict:
        return {
            "generating_lines": [pts.label_line(l) for l in self.generating_lines],
            "points": sorted(pts.points[p] for p in self.points),
            "num_points": len(self.points),
            "num_lines": len(self.lines),
            "classification": self.classification,
        }


def classify_plane(pts: PartialTripleSystem, closure: frozenset) -> tuple:
    lines = [l for l in pts.lines if set(l) <= closure]
    deg = {p: 0 for p in closure}
    for l in lines:
        for p in l:
            deg[p] += 1
    npts, nlines = len(closure), len(lines)
    if npts == 6 and nlines == 4 and all(d == 2 for d in deg.values()):
        return "DualAffineOrder2", lines
    if npts == 9 and nlines == 12:
        return "AffineOrder3", lines
    return f"Other({npts},{nlines})", lines


def planes(pts: PartialTripleSystem) -> list:
    """One report per distinct plane spanned by two intersecting lines."""
    pts.validate()
    seen = {}
    for l1, l2 in itertools.combinations(pts.lines, 2):
        if not set(l1) & set(l2):
            continue
        closure = subspace_closure(pts, set(l1) | set(l2))
        if closure in seen:
            continue
        kind, lines = classify_plane(pts, closure)
        seen[closure] = PlaneReport((l1, l2), closure, lines, kind)
    return list(seen.values())


@dataclass
class FischerReport:
    is_fischer: bool
    bad_plane: PlaneReport | None = None
    planes: list = dc_field(default_factory=list)


def fischer_check(pts: PartialTripleSystem) -> FischerReport:
    ps = planes(pts)
    bad = next((p for p in ps if p.classification not in ("DualAffineOrder2", "AffineOrder3")),
               None)
    return FischerReport(bad is None, bad, ps)


@dataclass
class CentralAutomorphism:
    center: int
    permutation: tuple | None
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.permutation is not None


def central_automorphism(pts: PartialTripleSystem, x: int) -> CentralAutomorphism:
    """The permutation fixing ``x`` and ``x``-perp and swapping the two other
    points on every line through ``x``; ``witness`` is a line whose image is
    not a line when this is not an automorphism."""
    perm = list(range(pts.n))
    for line in pts.lines_on(x):
        y, z = (p for p in line if p != x)
        perm[y], perm[z] = z, y
    lineset = set(pts.lines)
    for line in pts.lines:
        img = tuple(sorted(perm[p] for p in line))
        if img not in lineset:
            return CentralAutomorphism(x, None, line)
    return CentralAutomorphism(x, tuple(perm))


# -- builtin spaces -------------------------------------------------------------------

def fano() -> PartialTripleSystem:
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return PartialTripleSystem([str(i) for i in range(1, 8)], lines)


def ag23() -> PartialTripleSystem:
    """Affine plane of order 3 on Z_3 x Z_3."""
    pts = [(a, b) for a in range(3) for b in range(3)]
    idx = {p: i for i, p in enumerate(pts)}
    lines = set()
    for p in pts:
        for d in ((0, 1), (1, 0), (1, 1), (1, 2)):
            line = tuple(sorted(idx[((p[0] + t * d[0]) % 3, (p[1] + t * d[1]) % 3)]
                                for t in range(3)))
            lines.add(line)
    return PartialTripleSystem([f"{a}{b}" for a, b in pts], sorted(lines))


def sym_triangles(n: int) -> PartialTripleSystem:
    """Transpositions of Sym(n) with the triples inside the Sym(3) subgroups."""
    if n < 3:
        raise GeometryError("SymTriangles needs n >= 3")
    trans = list(itertools.combinations(range(1, n + 1), 2))
    idx = {t: i for i, t in enumerate(trans)}
    lines = [tuple(sorted(idx[p] for p in itertools.combinations(tri, 2)))
             for tri in itertools.combinations(range(1, n + 1), 3)]
    return PartialTripleSystem([f"({a}{b})" for a, b in trans], lines)


def dual_affine2() -> PartialTripleSystem:
    """Dual affine plane of order 2: the octahedron's 6 vertices and 4 faces."""
    return PartialTripleSystem(["a", "b", "c", "a'", "b'", "c'"],
                               [("a", "b", "c"), ("a", "b'", "c'"),
                                ("a'", "b", "c'"), ("a'", "b'", "c")])


def single_line() -> PartialTripleSystem:
    return PartialTripleSystem(["x", "y", "z"], [("x", "y", "z")])


def disconnected_2b() -> PartialTripleSystem:
    return PartialTripleSystem(["p", "q"], [])


def two_lines() -> PartialTripleSystem:
    """Five points on two lines meeting in y; not a Fischer space."""
    return PartialTripleSystem(["x", "y", "z", "u", "v"], [("x", "y", "z"), ("y", "u", "v")])


def line_and_point() -> PartialTripleSystem:
    return PartialTripleSystem(["x", "y", "z", "w"], [("x", "y", "z")])


BUILTINS = {
    "fano": fano,
    "ag23": ag23,
    "dualaffine2": dual_affine2,
    "singleline": single_line,
    "disconnected2b": disconnected_2b,
    "twolines": two_lines,
    "lineandpoint": line_and_point,
}


def builtin_space(name: str) -> PartialTripleSystem:
    key = name.strip().lower().replace("_", "").replace("-", "")
    if key.startswith("symtriangles"):
        arg = key[len("symtriangles"):].strip(":()")
        try:
            n = int(arg)
        except ValueError:
            raise GeometryError(f"bad SymTriangles parameter in {name!r}") from None
        pts = sym_triangles(n)
    elif key in BUILTINS:
        pts = BUILTINS[key]()
    else:
        raise GeometryError(f"unknown builtin space {name!r}")
    pts.validate()
    return pts


def is_builtin(name: str) -> bool:
    try:
        builtin_space(name)
    except GeometryError:
        return False
    return True


def load(path) -> PartialTripleSystem:
    with open(path) as fh:
        return PartialTripleSystem.from_json(json.load(fh))
