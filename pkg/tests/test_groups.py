from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axialgebra.axial import axis_closure
from axialgebra.dihedral import three_c, two_b
from axialgebra.geometry import builtin_space
from axialgebra.groups import (CapExceeded, ClosureNotInvariant, NotATranspositionSet, Perm,
                               TranspositionSet, fischer_space_of, group_closure,
                               miyamoto_group, symmetric_transpositions,
                               three_transposition_check)
from axialgebra.matsuo import MatsuoParameters, build

q = Fraction(1, 4)


def cyc(*c):
    return Perm.from_cycles(4, c, base=1)


def test_closure_sym4():
    assert len(group_closure([cyc(1, 2), cyc(2, 3), cyc(3, 4)])) == 24
    assert len(group_closure([Perm.identity(4)])) == 1
    with pytest.raises(CapExceeded):
        group_closure([cyc(1, 2), cyc(1, 2, 3, 4)], cap=10)


def test_orders():
    assert (cyc(1, 2) * cyc(3, 4)).order() == 2
    assert (cyc(1, 2) * cyc(2, 3)).order() == 3


def test_composition_convention():
    # p * q applies p first
    p, r = cyc(1, 2), cyc(2, 3)
    assert (p * r)(0) == r(p(0))
    assert p.conj(r) == r.inverse() * p * r == cyc(1, 3)


def test_sym4_transpositions():
    ts = TranspositionSet(symmetric_transpositions(4))
    rep = three_transposition_check(ts)
    assert rep.ok
    assert rep.histogram == {1: 6, 2: 3, 3: 12}
    fs = fischer_space_of(ts)
    assert (fs.n, len(fs.lines)) == (6, 4)
    assert fs.invariants() == builtin_space("dualaffine2").invariants()


def test_sym3_gives_single_line():
    fs = fischer_space_of(TranspositionSet(symmetric_transpositions(3)))
    assert (fs.n, len(fs.lines)) == (3, 1)


def test_commuting_involutions():
    fs = fischer_space_of(TranspositionSet([cyc(1, 2), cyc(3, 4)]))
    assert (fs.n, len(fs.lines)) == (2, 0)


def test_rejects_non_involution_and_non_normal():
    with pytest.raises(NotATranspositionSet):
        TranspositionSet([cyc(1, 2, 3, 4)])
    with pytest.raises(NotATranspositionSet):
        TranspositionSet([cyc(1, 2), cyc(2, 3)])


def test_miyamoto_3c():
    mg = miyamoto_group(three_c(q), eta=q)
    assert len(mg.axes) == 3 and mg.order == 6
    assert all(p.order() == 2 for p in mg.perms)
    assert mg.check.ok and mg.bijective_tau


def test_miyamoto_2b_trivial():
    mg = miyamoto_group(two_b(), eta=q)
    assert mg.order == 1
    assert all(p.is_identity() for p in mg.perms)
    assert mg.notes


def test_miyamoto_dual_affine():
    a = build(builtin_space("dualaffine2"), MatsuoParameters(q))
    mg = miyamoto_group(a, axis_closure(a, q), q)
    assert len(mg.perms) == 6 and mg.order == 24 and mg.check.ok


def test_incomplete_closure_rejected():
    a = three_c(q)
    with pytest.raises(ClosureNotInvariant):
        miyamoto_group(a, [a.axes[0], a.axes[1]], q)


@pytest.mark.parametrize("name", ["singleline", "dualaffine2", "ag23", "symtriangles:4"])
def test_matsuo_fischer_space_recovered(name):
    pts = builtin_space(name)
    a = build(pts, MatsuoParameters(q))
    mg = miyamoto_group(a, axis_closure(a, q), q)
    ts = TranspositionSet(mg.nontrivial())
    assert three_transposition_check(ts).ok
    fs = fischer_space_of(ts)
    assert fs.invariants() == pts.invariants()
    members = set(ts.dset)
    assert all(d.conj(e) in members for d in ts.dset for e in ts.dset)


def test_isolated_point_has_trivial_tau():
    pts = builtin_space("lineandpoint")
    a = build(pts, MatsuoParameters(q))
    mg = miyamoto_group(a, axis_closure(a, q), q)
    assert mg.perms[pts.index["w"]].is_identity()
    assert len(mg.nontrivial()) == 3 and mg.order == 6


perms = st.permutations(range(5)).map(Perm)


@given(perms, perms, perms)
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Perm.identity(5)
    assert (a ** a.order()).is_identity()
    assert (a * b).order() == (b * a).order()
