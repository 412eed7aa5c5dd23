from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axialgebra.scalar import (QQ, FieldMismatch, Field, FpElement, ParseError, field_of,
                               parse_scalar, render_scalar)

F7 = Field.prime(7)
F5 = Field.prime(5)


def test_rational_sum():
    assert QQ("1/2") + QQ("1/3") == Fraction(5, 6)


def test_inverse_of_two_mod_seven():
    assert F7(1) / F7(2) == F7(4)
    assert int(F7(1) / 2) == 4


def test_one_over_32_mod_five():
    x = F5(1) / F5(32)
    assert x == F5(3)
    assert F5(32) * x == F5(1)


def test_fraction_coerces_into_fp():
    assert F7(Fraction(1, 2)) == F7(4)
    assert F7(3) * Fraction(1, 2) == F7(5)


@pytest.mark.parametrize("text,field,expected", [
    ("1/4", QQ, Fraction(1, 4)),
    ("-3/6", QQ, Fraction(-1, 2)),
    ("1/2", F7, F7(4)),
    (" 5 ", QQ, Fraction(5)),
])
def test_parse(text, field, expected):
    assert parse_scalar(text, field) == expected


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_scalar("0.5", QQ)
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/0", QQ)
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/7", F7)


def test_render():
    assert render_scalar(Fraction(-1, 2)) == "-1/2"
    assert render_scalar(Fraction(3)) == "3"
    assert render_scalar(F7(-1)) == "6"


def test_field_tags():
    assert Field.from_tag("Q") == QQ
    assert Field.from_tag("Fp:7") == F7
    assert F7.tag == "Fp:7"
    for bad in ("Fp:2", "Fp:9", "R", "Fp:x"):
        with pytest.raises(ValueError):
            Field.from_tag(bad)


def test_mixed_primes_rejected():
    with pytest.raises(FieldMismatch):
        F7(1) + F5(1)


def test_field_of():
    assert field_of(F7(3)) == F7
    assert field_of(Fraction(1, 3)) == QQ


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        F7(1) / F7(0)


fp_vals = st.integers(min_value=-50, max_value=50)


@given(fp_vals, fp_vals, fp_vals)
def test_fp_field_axioms(a, b, c):
    x, y, z = F7(a), F7(b), F7(c)
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x - y) + y == x
    if y:
        assert (x / y) * y == x


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_parse_render_roundtrip(n, d):
    q = Fraction(n, d)
    assert parse_scalar(render_scalar(q), QQ) == q
    r = F7(q) if d % 7 else F7(n)
    assert parse_scalar(render_scalar(r), F7) == r


def test_fp_hash_consistent_with_eq():
    assert hash(FpElement(3, 7)) == hash(FpElement(10, 7))
    assert {F7(3), F7(10)} == {F7(3)}
