import pytest

from ellsurf import octahedral as octa
from ellsurf.field import I, ONE, R2, ZERO, FieldElem
from ellsurf.poly import Poly, poly_eval


def test_catalog_identities_vanish():
    for name, residual in octa.catalog_identities():
        assert residual.is_zero(), name


@pytest.mark.parametrize("which, order", [("quaternion", 8), ("tetrahedral", 24), ("octahedral", 48)])
def test_group_orders_and_closure(which, order):
    g = octa.enumerate_group(which)
    assert len(g) == order
    assert octa.is_closed(g)
    assert all(x.det() == ONE for x in g)


def test_subgroup_chain():
    mats = lambda w: {g.matrix for g in octa.enumerate_group(w)}
    assert mats("quaternion") < mats("tetrahedral") < mats("octahedral")


def test_elements_come_in_sign_pairs():
    mats = {g.matrix for g in octa.enumerate_group()}
    assert all(tuple(-x for x in m) in mats for m in mats)


def test_table_reproduced():
    assert octa.check_group_table() == []


def _element(*entries):
    target = tuple(FieldElem.coerce(x) for x in entries)
    return next(g for g in octa.enumerate_group() if g.matrix == target)


def test_named_signatures():
    assert octa.action_signature(_element(I, 0, 0, -I)).images == ((1, 1), (-1, 2), (-1, 3))
    assert octa.action_signature(_element(0, I, I, 0)).images == ((-1, 1), (1, 2), (-1, 3))
    h = ONE / 2
    cyc = _element(h * (1 + I), h * (-1 + I), h * (1 + I), h * (1 - I))
    assert octa.action_signature(cyc).images == ((1, 2), (1, 3), (1, 1))
    r = ONE / R2
    assert octa.act(_element(r, -r, r, r), octa.V1) in (octa.V2, -octa.V2)


def test_invariant_signs_split_the_group():
    for g, sv, se, sf in octa.invariant_signs():
        assert sf == 1
        assert sv == se
        assert (sv == 1) == g.tetrahedral


def test_signatures_form_a_subgroup_of_signed_permutations():
    image = octa.signature_image()
    assert image <= set(octa.all_signed_permutations())
    assert all(a.compose(b) in image for a in image for b in image)
    assert len(image) == 24


@pytest.mark.parametrize("which, k, coeff", [
    ("quaternion", 4, 2),
    ("octahedral", 24, 2),
    ("tetrahedral", 12, 2),
    ("tetrahedral", 14, 1),
    ("octahedral", 0, 1),
])
def test_molien_coefficients(which, k, coeff):
    assert octa.molien_series(which, 30)[k] == coeff


@pytest.mark.parametrize("which", ["quaternion", "tetrahedral", "octahedral"])
def test_molien_matches_closed_form(which):
    series = octa.molien_series(which, 48)
    assert series == octa.hilbert_closed_form(which, 48)
    assert all(isinstance(c, int) and c >= 0 for c in series)


def test_spot_values():
    at = {"alpha": 1, "beta": 2}
    e, f, v = (poly_eval(p, at) for p in (octa.E, octa.F, octa.V))
    assert (e, f, v) == (FieldElem(-39032), FieldElem(1924), FieldElem(-120))
    assert e * e == f ** 3 - 27 * v ** 4


def test_conic_on_a_random_point():
    at = {"alpha": FieldElem(3, 1), "beta": FieldElem(-2, 0, 5)}
    vals = [poly_eval(p, at) for p in (octa.V1, octa.V2, octa.V3)]
    assert sum((x * x for x in vals), ZERO) == ZERO
    assert isinstance(octa.V1, Poly)
