"""Exact scalars: the rationals (as :class:`fractions.Fraction`) and prime fields F_p, p odd."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union


class ScalarError(ValueError):
    pass


class FieldMismatch(ScalarError):
    pass


class ParseError(ScalarError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FpElement:
    """Residue class modulo an odd prime, stored in [0, p-1]."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image in F_{self.p}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(o * pow(self.v, -1, self.p), self.p)

    def __pow__(self, k: int):
        if k < 0:
            if self.v == 0:
                raise ZeroDivisionError("division by zero in F_%d" % self.p)
            return FpElement(pow(self.v, -1, self.p) ** -k, self.p)
        return FpElement(pow(self.v, k, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        try:
            o = self._coerce(other)
        except ZeroDivisionError:
            return False
        if o is None:
            return NotImplemented
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"FpElement({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, FpElement]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


class Field:
    """Either the rationals (``p is None``) or the prime field F_p.

    Calling a field converts ints, fractions, scalar strings and elements of the
    same field into canonical elements.
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if p == 2:
                raise ScalarError("characteristic 2 is not supported")
            if not _is_prime(p):
                raise ScalarError(f"{p} is not a prime")
        self.p = p

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def from_tag(cls, tag: str) -> "Field":
        tag = tag.strip()
        if tag in ("Q", "QQ"):
            return cls(None)
        m = re.fullmatch(r"(?:Fp:|F|GF)\(?(\d+)\)?", tag)
        if not m:
            raise ParseError(f"unknown field tag {tag!r}")
        return cls(int(m.group(1)))

    @property
    def tag(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        if isinstance(x, str):
            return parse_scalar(x, self)
        if self.p is None:
            if isinstance(x, FpElement):
                raise FieldMismatch(f"F_{x.p} element used over Q")
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"cannot convert {type(x).__name__} to a rational")
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element used over F_{self.p}")
            return x
        if isinstance(x, int):
            return FpElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return FpElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise TypeError(f"cannot convert {type(x).__name__} to F_{self.p}")

    def contains(self, x) -> bool:
        if self.p is None:
            return isinstance(x, Fraction)
        return isinstance(x, FpElement) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field.rationals()" if self.p is None else f"Field.prime({self.p})"

    def __str__(self):
        return self.tag


QQ = Field.rationals()


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse ``"a"`` or ``"a/b"``; over F_p the denominator is inverted mod p."""
    m = _SCALAR_RE.match(text)
    if not m:
        raise ParseError(f"not a scalar: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    if field.p is None:
        return Fraction(num, den)
    if den % field.p == 0:
        raise ZeroDivisionError(f"denominator of {text!r} vanishes mod {field.p}")
    return FpElement(num * pow(den, -1, field.p), field.p)


def render_scalar(x: Scalar) -> str:
    if isinstance(x, FpElement):
        return str(x.v)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def field_of(x) -> Field:
    if isinstance(x, FpElement):
        return Field(x.p)
    return QQ
