from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellsurf.field import (
    I,
    ONE,
    ZERO,
    FieldElem,
    ParseError,
    ZeroInverse,
    field_sqrt,
    format_field,
    parse_field,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
elements = st.builds(FieldElem, rationals, rationals, rationals, rationals)
nonzero = elements.filter(bool)

R2 = FieldElem(0, 0, 1)


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert ONE / a == a.inverse()


@given(elements)
def test_text_round_trip(a):
    assert parse_field(format_field(a)) == a


@given(nonzero)
@settings(max_examples=200)
def test_sqrt_of_square(a):
    r = field_sqrt(a * a)
    assert r is not None and r * r == a * a


def test_generators():
    assert I * I == -ONE
    assert R2 * R2 == FieldElem(2)
    assert field_sqrt(2) == R2
    assert field_sqrt(-2) * field_sqrt(-2) == FieldElem(-2)
    assert field_sqrt(FieldElem(2) * I) is not None  # (1 + i)^2
    assert field_sqrt(3) is None


@pytest.mark.parametrize("text, coords", [
    ("0", (0, 0, 0, 0)),
    ("7", (7, 0, 0, 0)),
    ("-1/2 + 3*i", (Fraction(-1, 2), 3, 0, 0)),
    ("r2 - i*r2", (0, 0, 1, -1)),
    ("2/3*i*r2", (0, 0, 0, Fraction(2, 3))),
])
def test_parse(text, coords):
    assert parse_field(text).coords == tuple(Fraction(c) for c in coords)


def test_format_is_canonical():
    assert format_field(FieldElem(Fraction(1, 2), -3, 1, 0)) == "1/2 - 3*i + r2"
    assert format_field(ZERO) == "0"


@pytest.mark.parametrize("bad", ["", "2*j", "1/0", "+", "sqrt2"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_field(bad)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverse):
        ZERO.inverse()
