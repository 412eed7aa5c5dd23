from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axialgebra.axial import jordan_miyamoto
from axialgebra.dihedral import (BadEta, BadParameters, UnclassifiedPair, b_ideals, build_B,
                                 catalog, cl0, cl00, classify_pair, extract_invariants, pi_of,
                                 spin_factor, spin_factor_delta, third_axis, three_c,
                                 three_c_star, two_b)
from axialgebra.scalar import QQ, Field

q = Fraction(1, 4)
h = Fraction(1, 2)
F3 = Field.prime(3)


def sigma(alg, x, y, eta):
    xy = alg.multiply_vectors(x, y)
    return tuple(p - eta * a - eta * b for p, a, b in zip(xy, x, y))


def test_b_isomorphic_to_3c():
    eta = Fraction(1, 3)
    a = three_c(eta)
    x, y = a.axes
    assert a.rebase([x, y, sigma(a, x, y, eta)]).same_structure(build_B(eta, eta / 2))


def test_b_half_zero_is_spin_minus_two():
    s = spin_factor_delta(-2)
    x, y = s.axes
    assert s.rebase([x, y, sigma(s, x, y, h)]).same_structure(build_B(h, 0))


def test_b_quarter_zero():
    b = build_B(q, 0)
    assert b.product(0, 2) == (-q, 0, 0)
    assert pi_of(q, 0) == -q


def test_b_peirce_bases():
    eta, phi = Fraction(1, 3), Fraction(2, 7)
    b = build_B(eta, phi)
    for p, axis in (("c", 0), ("d", 1)):
        ad = b.adjoint_matrix(axis)
        for lam, key in ((1, "1"), (0, "0"), (eta, "eta")):
            v = b.peirce_bases[p][key]
            assert ad.apply(v) == tuple(lam * x for x in v)


def test_invariants_3c():
    for eta in (q, Fraction(1, 32)):
        inv = extract_invariants(three_c(eta), 0, 1, eta)
        assert inv.phi == eta / 2
        assert inv.pi == (1 - eta) * eta / 2 - eta


def test_invariants_2b():
    inv = extract_invariants(two_b(), 0, 1, q)
    assert inv.phi == 0 and inv.pi == -q
    assert inv.sigma == (-q, -q)


def test_invariants_equal_pair():
    a = three_c(q)
    inv = extract_invariants(a, 0, 0, q)
    assert inv.phi == 1 and inv.pi == 1 - 2 * q
    assert inv.sigma == (1 - 2 * q, 0, 0)


@pytest.mark.parametrize("eta,phi,expected", [
    (q, Fraction(1, 8), "JordanGeneric"),
    (h, 3, "JordanGeneric"),
    (q, 1, "JordanOnlyIfAssociativeQuotient"),
])
def test_quotient_condition(eta, phi, expected):
    from axialgebra.dihedral import jordan_quotient_condition
    assert jordan_quotient_condition(eta, phi) == expected


def test_b_ideals():
    ideals = b_ideals(-1, Fraction(-1, 2))
    assert [sp.basis for sp, _ in ideals] == [((0, 0, 1),)]
    ideals = b_ideals(q, 0)
    assert len(ideals) == 3
    assert ideals[0][0] == build_B(q, 0).span([(q, q, 1)])
    assert sorted(sp.dim for sp, _ in ideals) == [1, 2, 2]
    assert b_ideals(q, Fraction(1, 8)) == []
    assert [sp.dim for sp, _ in b_ideals(q, 1)] == [2]


def test_classify_examples():
    assert classify_pair(three_c(q), 0, 1, q).label == "Type3C(1/4)"
    c = classify_pair(three_c_star(), 0, 1, -1)
    assert (c.label, c.dim) == ("Type3Cstar", 2)
    s = spin_factor_delta(1)
    c = classify_pair(s, s.axes[0], s.axes[1], h)
    assert (c.label, c.dim) == ("SpinFactor(1)", 3)
    assert classify_pair(two_b(), 0, 1, q).label == "Type2B"
    assert classify_pair(three_c(q), 0, 0, q).label == "Type1A"
    assert classify_pair(cl0(), 0, 1, h).label == "Cl0"
    assert classify_pair(cl00(), 0, 1, h).label == "Cl00"


def test_classify_char_three_coincidence():
    a = three_c(F3(2), F3)  # eta = -1 = 1/2 in characteristic three
    c = classify_pair(a, 0, 1, F3(2))
    assert c.label == "Cl00"
    assert c.coincidence == ["Type3C(2)"]


def test_classify_rejects_non_jordan_pair():
    from axialgebra.dihedral import NotJordanPair
    b = build_B(Fraction(1, 3), 1)
    with pytest.raises((NotJordanPair, UnclassifiedPair)):
        classify_pair(b, 0, 1, Fraction(1, 3))


def test_catalog_entries():
    a = catalog("3C", eta=Fraction(1, 32))
    assert a.name == "3C(1/32)"
    c = cl00()
    assert not any(c.product(2, 2)) and not any(c.product(0, 2))
    assert catalog("Cl00").same_structure(c)
    assert catalog("spin", delta=1).same_structure(spin_factor_delta(1))
    with pytest.raises(BadParameters):
        catalog("nonsense")
    with pytest.raises(BadEta):
        three_c(1)


def test_spin_delta_two_restricts_to_cl0():
    s = spin_factor_delta(2)
    x, y = s.axes
    sub = s.generated_subalgebra([x, y])
    assert sub.dim == 2
    assert s.rebase([x, y]).same_structure(cl0())
    rad = s.rebase([x, y])
    quo = rad.quotient(rad.span([(1, -1)]))
    assert quo.dim == 1 and quo.product(0, 0) == (1,)


def test_spin_rejects_non_idempotent_axis():
    with pytest.raises(BadParameters):
        spin_factor([[2]], axes=[(1, 1)])


def test_third_axis_3c():
    assert third_axis(three_c(q), 0, 1, q) == (0, 0, 1)


etas = st.sampled_from([q, Fraction(1, 32), Fraction(1, 3), Fraction(-1), Fraction(3, 7)])
phis = st.fractions(min_value=-3, max_value=3, max_denominator=12)


@given(etas, phis)
def test_sigma_identities_in_b(eta, phi):
    b = build_B(eta, phi)
    pi = pi_of(eta, phi)
    c, d = (1, 0, 0), (0, 1, 0)
    s = sigma(b, c, d, eta)
    m = b.multiply_vectors
    assert m(s, s) == tuple(pi * x for x in s)
    assert m(c, s) == tuple(pi * x for x in c)
    assert m(d, s) == tuple(pi * x for x in d)
    cd = m(c, d)
    assert m(cd, s) == tuple(pi * x for x in cd)


@given(etas)
def test_classify_symmetric_and_tau_invariant(eta):
    a = three_c(eta)
    base = classify_pair(a, 0, 1, eta).label
    assert classify_pair(a, 1, 0, eta).label == base
    y2 = jordan_miyamoto(a, 0, eta)((0, 1, 0))
    assert classify_pair(a, 0, y2, eta).label == base


@given(etas)
def test_sigma_fixed_by_both_taus(eta):
    a = three_c(eta)
    x, y = a.axes
    s = sigma(a, x, y, eta)
    assert jordan_miyamoto(a, x, eta)(s) == s
    assert jordan_miyamoto(a, y, eta)(s) == s
    assert a.generated_subalgebra([x, y]) == a.span([x, y, s])
