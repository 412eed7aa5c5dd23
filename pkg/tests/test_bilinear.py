from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axialgebra.axial import jordan_peirce
from axialgebra.bilinear import (GramForm, NotAssociative, associativity_defect, combine,
                                 eigenspace_orthogonality, radical, solve_associative_forms)
from axialgebra.dihedral import cl00, spin_factor, spin_factor_delta, three_c, two_b
from axialgebra.geometry import builtin_space
from axialgebra.linalg import Matrix
from axialgebra.matsuo import MatsuoParameters, build
from axialgebra.scalar import QQ

q = Fraction(1, 4)
h = Fraction(1, 2)


def test_3c_form_normalized():
    for eta in (q, Fraction(1, 32), Fraction(-1)):
        forms = solve_associative_forms(three_c(eta))
        assert len(forms) == 1
        g = forms[0].gram
        assert all(g[i, i] == 1 for i in range(3))
        assert all(g[i, j] == eta / 2 for i in range(3) for j in range(3) if i != j)


def test_2b_forms():
    forms = solve_associative_forms(two_b())
    assert len(forms) == 2
    assert all(f((1, 0), (0, 1)) == 0 for f in forms)


def test_five_point_space_has_no_form():
    a = build(builtin_space("twolines"), MatsuoParameters(q))
    assert solve_associative_forms(a) == []


def test_radicals():
    f = solve_associative_forms(three_c(-1))[0]
    assert radical(f) == three_c(-1).span([(1, 1, 1)])
    assert radical(solve_associative_forms(three_c(q))[0]).dim == 0


def test_3c_gram_determinant():
    # det = (1 - eta/2)^2 (1 + eta)
    g = solve_associative_forms(three_c(q))[0].gram
    a = [list(r) for r in g.rows]
    det = (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
           - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
           + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    assert det == (1 - q / 2) ** 2 * (1 + q)


def test_cl00_radical_contains_s():
    a = cl00()
    forms = solve_associative_forms(a)
    assert forms
    for f in forms:
        assert (0, 0, 1) in radical(f)


def test_spin_factor_natural_form():
    # <1,1> = 2 and V = 1-perp, with b on V
    s = spin_factor_delta(1)
    f = GramForm(s, [[2, 0, 0], [0, 2, 1], [0, 1, 2]])
    assert eigenspace_orthogonality(f, jordan_peirce(s, s.axes[0], h))


def test_non_associative_rejected():
    with pytest.raises(NotAssociative):
        GramForm(three_c(q), Matrix.identity(3, QQ))
    assert associativity_defect(three_c(q), Matrix.identity(3, QQ)) is not None


def test_orthogonality_3c_and_ag23():
    f = solve_associative_forms(three_c(q))[0]
    assert eigenspace_orthogonality(f, jordan_peirce(three_c(q), 0, q))
    a = build(builtin_space("ag23"), MatsuoParameters(q))
    f = solve_associative_forms(a)[0]
    for p in range(a.dim):
        assert eigenspace_orthogonality(f, jordan_peirce(a, p, q))


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_combinations_of_forms_are_associative(s, t):
    forms = solve_associative_forms(two_b())
    g = combine(forms, [s, t]).gram
    assert associativity_defect(two_b(), g) is None


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_form_invariance(x, y, z):
    a = three_c(q)
    f = solve_associative_forms(a)[0]
    assert f(a.multiply_vectors(x, z), y) == f(x, a.multiply_vectors(z, y))
