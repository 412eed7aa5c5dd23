import json

import pytest
from hypothesis import given, strategies as st

from axialgebra.geometry import (BadLineSize, DuplicateLine, GeometryError, PairOnTwoLines,
                                 PartialTripleSystem, builtin_space, central_automorphism,
                                 connected_components, fischer_check, is_subspace, load, planes,
                                 restrict, subspace_closure)


def test_fano_valid_steiner():
    info = builtin_space("fano").validate()
    assert info["valid"] and info["steiner"]


def test_pair_on_two_lines():
    with pytest.raises(PairOnTwoLines):
        PartialTripleSystem("abcd", [("a", "b", "c"), ("a", "b", "d")]).validate()


def test_other_validation_errors():
    with pytest.raises(DuplicateLine):
        PartialTripleSystem("abc", [("a", "b", "c"), ("c", "b", "a")]).validate()
    with pytest.raises(BadLineSize):
        PartialTripleSystem("abc", [("a", "b")]).validate()
    with pytest.raises(BadLineSize):
        PartialTripleSystem("abc", [("a", "a", "b")]).validate()
    with pytest.raises(GeometryError):
        PartialTripleSystem("ab", [("a", "b", "q")])


def test_dual_affine_not_steiner():
    info = builtin_space("dualaffine2").validate()
    assert info["valid"] and not info["steiner"]


def test_components():
    assert len(connected_components(builtin_space("fano"))) == 1
    two = PartialTripleSystem("abcdef", [("a", "b", "c"), ("d", "e", "f")])
    assert len(connected_components(two)) == 2
    assert len(connected_components(builtin_space("twolines"))) == 1


def test_subspace_closure():
    line = builtin_space("singleline")
    assert subspace_closure(line, {0, 1, 2}) == frozenset({0, 1, 2})
    fano = builtin_space("fano")
    assert subspace_closure(fano, set(fano.lines[0]) | set(fano.lines[1])) == frozenset(range(7))


def test_perp_in_dual_affine():
    pts = builtin_space("dualaffine2")
    a = pts.index["a"]
    assert pts.perp(a) == {pts.index["a'"]}
    assert is_subspace(pts, pts.perp(a))


def test_fischer_verdicts():
    assert fischer_check(builtin_space("ag23")).is_fischer
    assert len(planes(builtin_space("ag23"))) == 1
    assert fischer_check(builtin_space("dualaffine2")).is_fischer
    rep = fischer_check(builtin_space("fano"))
    assert not rep.is_fischer and len(rep.bad_plane.points) == 7
    assert not fischer_check(builtin_space("twolines")).is_fischer


def test_central_automorphisms():
    pts = builtin_space("dualaffine2")
    a = pts.index["a"]
    t = central_automorphism(pts, a)
    assert t.ok
    perm = t.permutation
    assert perm[a] == a and perm[pts.index["a'"]] == pts.index["a'"]
    assert {(pts.points[i], pts.points[perm[i]]) for i in range(6) if perm[i] != i} == {
        ("b", "c"), ("c", "b"), ("b'", "c'"), ("c'", "b'")}
    fano = central_automorphism(builtin_space("fano"), 0)
    assert not fano.ok and fano.witness is not None
    line = builtin_space("singleline")
    assert central_automorphism(line, 0).permutation == (0, 2, 1)


def test_builtin_counts():
    s4 = builtin_space("symtriangles:4")
    assert (s4.n, len(s4.lines)) == (6, 4)
    assert s4.invariants() == builtin_space("dualaffine2").invariants()
    s3 = builtin_space("SymTriangles(3)")
    assert (s3.n, len(s3.lines)) == (3, 1)
    ag = builtin_space("ag23")
    assert (ag.n, len(ag.lines)) == (9, 12) and ag.is_steiner()
    with pytest.raises(GeometryError):
        builtin_space("nosuch")


def test_json_roundtrip(tmp_path):
    pts = builtin_space("dualaffine2")
    path = tmp_path / "g.json"
    path.write_text(json.dumps(pts.to_json()))
    back = load(path)
    assert back.points == pts.points and back.lines == pts.lines


def test_restrict():
    pts = builtin_space("lineandpoint")
    comps = connected_components(pts)
    sizes = sorted(restrict(pts, c).n for c in comps)
    assert sizes == [1, 3]


@given(st.integers(3, 6))
def test_sym_triangles_is_fischer(n):
    pts = builtin_space(f"symtriangles:{n}")
    assert pts.n == n * (n - 1) // 2
    assert fischer_check(pts).is_fischer
    for p in range(pts.n):
        assert central_automorphism(pts, p).ok
