from fractions import Fraction

import pytest

from ellsurf import weierstrass as ws
from ellsurf.field import FieldElem
from ellsurf.poly import Poly, RationalFn

S, T = Poly.var("S"), Poly.var("T")

GENERIC = [("I1", (0, 0, 1)), ("II", (1, 1, 2)), ("III", (1, 2, 3)), ("I0*", (2, 3, 6))]


def shape(records):
    return [(str(r.type), r.orders) for r in records]


@pytest.mark.parametrize("orders, jc, expected", [
    ((0, 0, 0), "other", "I0"),
    ((0, 0, 3), "infinity", "I3"),
    ((2, 3, 6), "other", "I0*"),
    ((2, 3, 9), "infinity", "I3*"),
    ((1, 1, 2), "0", "II"),
    ((1, 2, 3), "1", "III"),
    ((2, 2, 4), "0", "IV"),
    ((3, 4, 8), "0", "IV*"),
    ((3, 5, 9), "1", "III*"),
    ((4, 5, 10), "0", "II*"),
])
def test_kodaira_rows(orders, jc, expected):
    assert str(ws.classify_fiber(orders, jc).type) == expected


def test_lower_bound_rows_are_flagged():
    loose = ws.classify_fiber((0, 0, 0), "other")
    tight = ws.classify_fiber((0, 0, 0), "other", degree_one=True)
    assert loose.e_p == tight.e_p == 1
    assert not loose.e_p_exact and tight.e_p_exact
    assert ws.classify_fiber((2, 2, 4), "0").e_p == 2


def test_field_valued_j_class():
    assert str(ws.classify_fiber((1, 1, 2), FieldElem(0)).type) == "II"
    assert str(ws.classify_fiber((0, 0, 0), Fraction(5, 3)).type) == "I0"


@pytest.mark.parametrize("orders, jc", [((1, 1, 2), "1"), ((5, 6, 12), "0"), ((0, 0, 1), "other")])
def test_unclassifiable(orders, jc):
    with pytest.raises(ws.UnclassifiableTriple):
        ws.classify_fiber(orders, jc)


def test_euler_numbers():
    assert [ws.FiberType.parse(t).euler_number for t in ("I1", "II", "III", "I0*", "I2*", "II*")] == \
        [1, 2, 3, 6, 8, 10]


def test_family_discriminant_factorization():
    a, b = Poly.var("alpha"), Poly.var("beta")
    data = ws.family_forms(a, b)
    assert data.disc == 27 ** 3 * T ** 2 * (T - S) ** 3 * (a * T - b * S) ** 6 * S


def test_j_is_t_over_s():
    data = ws.family_coefficients(Fraction(3, 7), Fraction(-2, 5))
    assert ws.j_function(data) == RationalFn(T, S)
    assert ws.j_function(data, "j") == RationalFn(1728 * T, S)


def test_degenerate_parameter():
    with pytest.raises(ws.DegenerateParameter):
        ws.family_coefficients(0, 0)


def test_concrete_member():
    a, b = ws.cover_parameters(1, 2)
    assert (a, b) == (FieldElem(1523497024), FieldElem(7122217024))
    recs = ws.fiber_configuration(1, 2)
    assert shape(recs) == GENERIC
    assert recs[-1].j_value == FieldElem(Fraction(481 ** 3, 4879 ** 2))
    assert Fraction(481 ** 3, 4879 ** 2) == Fraction(111284641, 23804641)
    assert sum(r.orders[2] for r in recs) == 12


@pytest.mark.parametrize("a, b", [(1, 3), (Fraction(-2, 7), 5), (FieldElem(1, 1), FieldElem(0, 2))])
def test_generic_members(a, b):
    assert shape(ws.fiber_configuration_ab(a, b)) == GENERIC


def test_fibers_are_listed_from_infinity():
    recs = ws.fiber_configuration_ab(2, 3)
    assert [r.j_class for r in recs] == ["infinity", "0", "1", "other"]


@pytest.mark.parametrize("case, special", [
    ("E=0", ("I1*", (2, 3, 7))),
    ("F=0", ("IV*", (3, 4, 8))),
    ("V=0", ("III*", (3, 5, 9))),
])
def test_confluent_cases(case, special):
    recs = ws.confluent_configuration(case)
    assert special in shape(recs)
    assert sum(r.orders[2] for r in recs) == 12
    assert len(recs) == 3


def test_generic_symbolic_case():
    assert shape(ws.confluent_configuration("generic")) == GENERIC


@pytest.mark.parametrize("a, b, special", [(0, 1, "I1*"), (1, 0, "IV*"), (1, 1, "III*")])
def test_confluent_numeric_members(a, b, special):
    assert special in [str(r.type) for r in ws.fiber_configuration_ab(a, b)]


@pytest.mark.parametrize("k", [4, 2, -1, FieldElem(0, 2)])
def test_twist(k):
    assert ws.verify_twist(3, 5, k)["ok"]


def test_twist_needs_a_square_root():
    with pytest.raises(ws.NoSquareRootInK):
        ws.verify_twist(3, 5, 3)


def test_cover_family_patches_between_charts():
    report = ws.patching_check()
    assert report and all(report.values()), report
