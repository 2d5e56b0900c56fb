from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ellsurf import octahedral as octa
from ellsurf import pencil as pen
from ellsurf.field import ONE, FieldElem
from ellsurf.poly import poly_eval

AT = {"alpha": FieldElem(1), "beta": FieldElem(2)}
E12, F12 = poly_eval(octa.E, AT), poly_eval(octa.F, AT)
NODAL, CUSP = pen.nodal_member(E12), pen.cuspidal_member(F12)

ratios = st.fractions(min_value=-40, max_value=40, max_denominator=12)


def test_v_forms():
    assert all(pen.v_form_checks().values())


def test_conic_reduction():
    V1, V2, V3 = pen.V1, pen.V2, pen.V3
    assert not pen.reduce_conic(V3 ** 2).is_zero()
    assert pen.reduce_conic(V1 ** 2 + V2 ** 2 + V3 ** 2).is_zero()
    assert pen.vanishes((V1 ** 2 + V2 ** 2 + V3 ** 2) * V1 * V3)


def test_base_points():
    pts = pen.base_points()
    assert sum(p.multiplicity for p in pts) == 9
    assert pen.base_point_check()


def test_base_points_at_a_parameter():
    pts = pen.base_point_values(1, 2)
    # w3 = V1 V2 = -24 here, so the + sign sits at negative y
    assert pts[4] == (FieldElem(Fraction(481, 144)), FieldElem(Fraction(-1, 6912)))
    assert pts[5] == (FieldElem(Fraction(481, 144)), FieldElem(Fraction(1, 6912)))
    assert len(set(pts)) == 6


def test_vertex_degeneration():
    with pytest.raises(pen.VertexDegeneration):
        pen.base_point_values(1, 0)


def test_singular_members():
    members = pen.singular_members()
    assert list(members) == ["I1", "II", "III", "I0*"]
    assert all(m["check"] for m in members.values())


def test_geometry_of_the_pencil():
    assert pen.tangency_check()
    assert pen.monodromy_check()


def test_transform():
    rep = pen.transform_check()
    assert rep["holds"] and rep["member_matches_transformed_cubic"]


@pytest.mark.parametrize("a, b", [(2, 7), (Fraction(-1, 3), 5)])
def test_transform_at_numeric_parameters(a, b):
    assert pen.transform_check(a, b)["holds"]


def test_one_generator_on_the_weierstrass_model():
    assert pen.theorem_residual(1, 2, 1).is_zero()


@pytest.mark.parametrize("i, j, sign", [(1, 2, 1), (2, 3, -1)])
def test_generator_at_a_point(i, j, sign):
    at = {f"V{k}": poly_eval(p, AT) for k, p in ((1, octa.V1), (2, octa.V2), (3, octa.V3))}
    at.update(S=FieldElem(1), T=FieldElem(3))
    x, y = (f.eval(at) for f in pen.section_generator(i, j, sign))
    a, b = E12 ** 2, F12 ** 3
    s, t = FieldElem(1), FieldElem(3)
    g2 = 27 * t * (t - s) * (a * t - b * s) ** 2
    g3 = 27 * t * (t - s) ** 2 * (a * t - b * s) ** 3
    assert y * y == 4 * x ** 3 - g2 * x - g3


# -- singular fibers ----------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(ratios, ratios)
def test_mu_is_multiplicative(a, b):
    assume(a not in (0, 1) and b not in (0, 1) and a * b != 1)
    p, q = pen.mu_inverse(a, E12), pen.mu_inverse(b, E12)
    assert pen.mu(p, E12) == FieldElem(a)
    assert pen.mu(pen.cubic_add(NODAL, p, q), E12) == FieldElem(a * b)


@settings(max_examples=40, deadline=None)
@given(ratios, ratios)
def test_nu_is_additive(a, b):
    assume(a and b and a + b)
    p, q = pen.nu_inverse(a, F12), pen.nu_inverse(b, F12)
    assert pen.nu(pen.cubic_add(CUSP, p, q), F12) == FieldElem(a + b)


def test_group_law_edge_cases():
    p = pen.nu_inverse(3, F12)
    assert pen.cubic_add(CUSP, p, pen.IDENTITY) == p
    assert pen.cubic_add(CUSP, p, pen.cubic_neg(CUSP, p)) == pen.IDENTITY
    doubled = pen.cubic_add(CUSP, p, p)
    assert pen.nu(doubled, F12) == FieldElem(6)


def test_singular_and_foreign_points_are_rejected():
    with pytest.raises(pen.SingularPointInput):
        pen.cubic_add(CUSP, (0, 0, 1), pen.IDENTITY)
    with pytest.raises(pen.NotOnCurve):
        pen.cubic_add(NODAL, (1, 1, 1), pen.IDENTITY)
    with pytest.raises(pen.CuspPoint):
        pen.nu((0, 0, 1), F12)


def test_mu_at_the_node():
    node = (FieldElem(Fraction(-3, 2)), FieldElem(0), ONE)
    with pytest.raises(pen.NodePoint):
        pen.mu(node, E12)


def test_mu_and_nu_at_base_points():
    assert all(m == r for m, r in pen.mu_at_base_points(1, 2))
    pts = pen.base_point_values(1, 2)
    for k in (1, 2, 3):
        x, y = pts[2 * (k - 1)]
        assert pen.nu((x, y, ONE), F12) == poly_eval(octa.pair_product(k), AT)


def test_generators_at_a_parameter():
    assert pen.singular_group_generators("II", 1, 2) == [FieldElem(0, -15), FieldElem(0, -20), FieldElem(-12)]
    gens = pen.singular_group_generators("I1", 1, 2)
    assert gens[0] == FieldElem(Fraction(4337, 287), 0, Fraction(3060, 287))
    assert all(g != ONE for g in gens)


def test_confluent_generators():
    # alpha/beta = 1 + sqrt2 is a zero of E inside K
    root = FieldElem(1, 0, 1)
    assert poly_eval(octa.E, {"alpha": root, "beta": ONE}) == 0
    with pytest.raises(pen.ConfluentCase):
        pen.singular_group_generators("I1", root, 1)
    assert len(pen.singular_group_generators("II", root, 1)) == 3
