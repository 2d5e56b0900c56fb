import pytest
from hypothesis import given
from hypothesis import strategies as st

from ellsurf.field import FieldElem
from ellsurf.poly import (
    Poly,
    RationalFn,
    ZeroForm,
    divide_linear,
    format_poly,
    parse_poly,
    poly_eval,
    poly_substitute,
    vanishing_order,
)

S, T, alpha, beta = (Poly.var(v) for v in ("S", "T", "alpha", "beta"))

small = st.integers(-5, 5)
monomials = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
polys = st.dictionaries(monomials, small, max_size=5).map(
    lambda d: sum((c * S ** i * T ** j * alpha ** k for (i, j, k), c in d.items()), Poly()))


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p - p).is_zero()


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@given(polys, st.integers(-4, 4), st.integers(-4, 4))
def test_eval_is_a_homomorphism(p, s, t):
    at = {"S": s, "T": t, "alpha": 2}
    assert poly_eval(p * p + p, at) == poly_eval(p, at) ** 2 + poly_eval(p, at)


def test_parse_unicode_and_powers():
    assert parse_poly("α^2 - 2*β**3 + (S - T)^2") == alpha ** 2 - 2 * beta ** 3 + (S - T) ** 2
    assert parse_poly("i*r2*S") == FieldElem(0, 0, 0, 1) * S


def test_substitute():
    p = S ** 2 + T
    assert poly_substitute(p, {"S": alpha + 1, "T": beta}) == alpha ** 2 + 2 * alpha + 1 + beta


def test_divide_linear():
    f = (T - 3 * S) ** 2 * (T + S)
    q, r = divide_linear(f, "T", 3 * S)
    assert r.is_zero()
    assert q == (T - 3 * S) * (T + S)


@pytest.mark.parametrize("point, order", [((0, 1), 2), ((1, 0), 1), ((1, 1), 3), ((2, 5), 0)])
def test_vanishing_order(point, order):
    f = S ** 2 * T * (T - S) ** 3
    assert vanishing_order(f, point) == order


def test_vanishing_order_of_zero_form():
    with pytest.raises(ZeroForm):
        vanishing_order(Poly(), (0, 1))


def test_rational_functions_compare_by_cross_multiplication():
    a = RationalFn(S ** 2 - T ** 2, S - T)
    assert a == RationalFn(S + T)
    assert a + RationalFn(1, S) == RationalFn(S ** 2 + S * T + 1, S)
    assert (a / a) == RationalFn(1)
    with pytest.raises(ZeroDivisionError):
        RationalFn(S, Poly())
