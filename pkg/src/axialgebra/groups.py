"""Permutation groups, 3-transposition sets and Miyamoto groups."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .algebra import Algebra
from .axial import AxisClosure, axis_closure, jordan_miyamoto
from .geometry import PartialTripleSystem


class GroupError(ValueError):
    pass


class CapExceeded(GroupError):
    pass


class NotATranspositionSet(GroupError):
    pass


class Not3Transpositions(GroupError):
    pass


class ClosureNotInvariant(GroupError):
    pass


class Perm:
    """Permutation of ``range(n)``; ``p * q`` applies ``p`` first, then ``q``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"{images} is not a permutation")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles, base: int = 0) -> "Perm":
        img = list(range(n))
        for cyc in cycles:
            cyc = [c - base for c in cyc]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise GroupError("permutations on different domains")
        return Perm(other.images[i] for i in self.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, e: int) -> "Perm":
        if e < 0:
            return self.inverse() ** (-e)
        out = Perm.identity(self.degree)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self, g: "Perm") -> "Perm":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        seen = [False] * self.degree
        out = 1
        for i in range(self.degree):
            if seen[i]:
                continue
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            out = out * length // _gcd(out, length)
        return out

    def cycles(self) -> list:
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        return "Perm(" + ("".join(str(c).replace(",", "") for c in cyc) if cyc else "()") + ")"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def group_closure(gens: Sequence[Perm], cap: int = 20000) -> list:
    """All elements of the group generated by ``gens`` (identity first)."""
    gens = list(gens)
    if not gens:
        raise GroupError("need at least one generator to fix the domain")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise GroupError("generators act on different domains")
    e = Perm.identity(n)
    elements = [e]
    seen = {e}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = x * g
            if y not in seen:
                if len(elements) >= cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                seen.add(y)
                elements.append(y)
        i += 1
    return elements


class TranspositionSet:
    """A conjugation-closed set ``D`` of involutions inside a finite group."""

    def __init__(self, dset: Sequence[Perm], group: Sequence[Perm] | None = None,
                 cap: int = 20000):
        dset = list(dict.fromkeys(dset))
        if not dset:
            raise NotATranspositionSet("empty transposition set")
        for d in dset:
            if d.order() != 2:
                raise NotATranspositionSet(f"{d} does not have order 2")
        self.dset = dset
        self.group = list(group) if group is not None else group_closure(dset, cap)
        members = set(dset)
        # conjugation by generators suffices, but an explicit group is checked fully
        conjugators = dset if group is None else self.group
        for d in dset:
            for g in conjugators:
                if d.conj(g) not in members:
                    raise NotATranspositionSet(f"{d} conjugated by {g} leaves the set")

    def __len__(self):
        return len(self.dset)


@dataclass
class ThreeTranspositionReport:
    ok: bool
    histogram: dict
    witness: tuple | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
                "witness": None if self.witness is None
                else [list(self.witness[0].images), list(self.witness[1].images)]}


def three_transposition_check(ts: TranspositionSet) -> ThreeTranspositionReport:
    """Order of ``d*e`` over unordered pairs, including ``d = e``."""
    hist = Counter()
    witness = None
    for i, d in enumerate(ts.dset):
        for e in ts.dset[i:]:
            o = (d * e).order()
            hist[o] += 1
            if o > 3 and witness is None:
                witness = (d, e)
    return ThreeTranspositionReport(witness is None, dict(hist), witness)


def fischer_space_of(ts: TranspositionSet) -> PartialTripleSystem:
    if not three_transposition_check(ts).ok:
        raise Not3Transpositions("product orders exceed 3")
    index = {d: i for i, d in enumerate(ts.dset)}
    lines = set()
    for d, e in itertools.combinations(ts.dset, 2):
        if (d * e).order() == 3:
            lines.add(tuple(sorted((index[d], index[e], index[d.conj(e)]))))
    return PartialTripleSystem([f"d{i}" for i in range(len(ts.dset))], sorted(lines))


def symmetric_transpositions(n: int) -> list:
    return [Perm.from_cycles(n, (a, b)) for a, b in itertools.combinations(range(n), 2)]


@dataclass
class MiyamotoGroup:
    axes: list
    perms: list
    faithful_on_axes: bool
    bijective_tau: bool
    order: int | None = None
    check: ThreeTranspositionReport | None = None
    notes: list = dc_field(default_factory=list)

    def nontrivial(self) -> list:
        return [p for p in self.perms if not p.is_identity()]

    def to_json(self) -> dict:
        return {
            "axes": len(self.axes),
            "perms": [list(p.images) for p in self.perms],
            "faithful_on_axes": self.faithful_on_axes,
            "bijective_tau": self.bijective_tau,
            "order": self.order,
            "three_transpositions": None if self.check is None else self.check.ok,
            "histogram": None if self.check is None else self.check.to_json()["histogram"],
            "notes": list(self.notes),
        }


def miyamoto_group(algebra: Algebra, closure: AxisClosure | Sequence | None = None, eta=None,
                   cap: int = 20000) -> MiyamotoGroup:
    """Miyamoto involutions as permutations of a closed axis set."""
    field = algebra.field
    eta = field(eta) if eta is not None else algebra.eta
    if closure is None:
        closure = axis_closure(algebra, eta)
    if isinstance(closure, AxisClosure):
        if not closure.complete:
            raise ClosureNotInvariant("axis closure is incomplete")
        axes, taus = closure.axes, closure.taus
    else:
        axes = [algebra._as_vector(a) for a in closure]
        taus = []
    while len(taus) < len(axes):
        taus.append(jordan_miyamoto(algebra, axes[len(taus)], eta))
    where = {a: i for i, a in enumerate(axes)}
    perms = []
    for a, t in zip(axes, taus):
        img = []
        for b in axes:
            im = t.matrix.apply(b)
            if im not in where:
                raise ClosureNotInvariant(f"image of an axis under tau({a}) is not in the set")
            img.append(where[im])
        perms.append(Perm(img))

    # faithful: distinct Miyamoto maps give distinct permutations
    faithful = True
    by_perm = {}
    for t, p in zip(taus, perms):
        if p in by_perm and by_perm[p].matrix != t.matrix:
            faithful = False
        by_perm.setdefault(p, t)
    bijective = True
    seen = {}
    for t in taus:
        if t.order == 1:
            continue
        if t.matrix in seen:
            bijective = False
        seen[t.matrix] = True

    notes = []
    nontrivial = [p for p in perms if not p.is_identity()]
    if not nontrivial:
        notes.append("every Miyamoto involution is trivial (zero eta-eigenspaces)")
        return MiyamotoGroup(axes, perms, faithful, bijective, 1, None, notes)
    group = group_closure(nontrivial, cap)
    try:
        check = three_transposition_check(TranspositionSet(nontrivial, cap=cap))
    except NotATranspositionSet as exc:
        notes.append(str(exc))
        check = ThreeTranspositionReport(False, {}, None)
    return MiyamotoGroup(axes, perms, faithful, bijective, len(group), check, notes)
