import random
from fractions import Fraction
from itertools import product

import pytest

from ellsurf import lattice as lat
from ellsurf.lattice import DivisorClass, named_class as N

SWEEP = list(product(range(-5, 6), repeat=3))


def test_form_is_odd_unimodular_of_signature_1_9():
    assert N("l").dot(N("l")) == 1
    assert all(N(f"e{k}").dot(N(f"e{k}")) == -1 for k in range(1, 10))
    assert N("f").dot(N("f")) == 0 and N("f") == 3 * N("l") - sum(
        (N(f"e{k}") for k in range(1, 10)), DivisorClass((0,) * 10))


def test_fiber_components_sum_to_the_fiber():
    f = N("f")
    assert N("u0") + N("u1") == f
    assert N("v0") + N("v1") + N("v2") + N("v3") + 2 * N("v4") == f


def test_zero_section_meets_only_identity_components():
    s0 = N("s0")
    assert lat.is_numerical_section(s0)
    assert [s0.dot(N(c)) for c in ("u0", "u1", "v0", "v1", "v2", "v3", "v4")] == [1, 0, 1, 0, 0, 0, 0]


def test_unknown_name():
    with pytest.raises(lat.UnknownName):
        N("e10")


def test_text_form():
    assert str(lat.section_class((1, 1, 0))) == "l - e4 - e5"
    assert str(lat.section_class((-1, 2, 0))) == "3l - e1 - e3 - 2e5 - e6 - e7 - e8 - e9"


def test_basis_sections_are_exceptional_curves():
    assert [lat.section_class(n) for n in ((1, 0, 0), (0, 1, 0), (0, 0, 1))] == [N("e1"), N("e2"), N("e3")]
    assert lat.section_class((0, 0, 0)) == N("s0")


@pytest.mark.parametrize("n", SWEEP[::37] + [(5, 5, 5), (-5, -5, -5)])
def test_section_class_properties(n):
    s = lat.section_class(n)
    assert s.dot(N("f")) == 1 and s.dot(s) == -1
    assert s == lat.section_class_components(n)
    assert lat.mw_project(s) == tuple(Fraction(k, 2) for k in n)
    assert lat.fiber_intersections(n) == lat.direct_intersections(s)


def test_each_reducible_fiber_is_met_once_on_a_simple_component():
    for n in SWEEP:
        hits = lat.fiber_intersections(n)
        assert hits["u0"] + hits["u1"] == 1
        assert hits["v0"] + hits["v1"] + hits["v2"] + hits["v3"] == 1 and hits["v4"] == 0


def test_addition_of_generators():
    total = lat.mw_add(N("e1"), N("e2"))
    assert total == N("e1") + N("e2") - N("e9") + N("f")
    assert lat.in_integer_span(total - lat.section_class((1, 1, 0))) is not None


def test_addition_is_compatible_with_indices():
    rng = random.Random(3)
    for _ in range(300):
        n = tuple(rng.randint(-6, 6) for _ in range(3))
        m = tuple(rng.randint(-6, 6) for _ in range(3))
        total = tuple(x + y for x, y in zip(n, m))
        diff = lat.mw_add(lat.section_class(n), lat.section_class(m)) - lat.section_class(total)
        assert lat.in_integer_span(diff) is not None


def test_inverse():
    for n in SWEEP[::53]:
        neg = lat.mw_inverse(n)
        zero = lat.mw_add(lat.section_class(n), neg)
        assert lat.in_integer_span(zero - N("s0")) is not None


def test_addition_rejects_non_sections():
    with pytest.raises(lat.NotNumericalSection):
        lat.mw_add(N("l"), N("e1"))


def test_span_membership_is_exact():
    assert lat.in_integer_span(2 * N("f") - N("v4")) == [2, 0, 0, 0, 0, -1]
    assert lat.in_integer_span(N("e1")) is None
    assert lat.span_coefficients(N("e1"), [2 * N("e1")]) == [Fraction(1, 2)]


def test_height_routes_agree():
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (2, -1, 3), (-1, -1, -1)]
    for p in pts:
        for q in pts:
            sp, sq = lat.section_class(p), lat.section_class(q)
            h = lat.height_pairing(p, q)
            assert h == lat.projected_height(sp, sq) == lat.shioda_height(sp, sq)
            assert h == Fraction(sum(a * b for a, b in zip(p, q)), 2)


@pytest.mark.parametrize("case", list(lat.CASES))
def test_shioda_tate(case):
    rep = lat.shioda_tate_report(case)
    assert rep["L_rank"] + rep["MW_rank"] == 8
    assert rep["det_L"] * rep["det_MW"] == 1
    assert rep["unimodular_check"]


def test_e8_roots():
    assert lat.e8_root_check()
    assert lat.e8_root_check(extended=True)
