"""Weierstrass data and Kodaira fiber configurations.

The family over the moduli line is

    g2 = 27 T (T - S) (aT - bS)^2,    g3 = 27 T (T - S)^2 (aT - bS)^3,

with J = T/S. Fibers are read off from the known factorization of the
discriminant, never from numeric root finding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import octahedral as octa
from .field import ONE, ZERO, FieldElem, field_sqrt, format_field
from .poly import Poly, RationalFn, poly_eval, poly_substitute, vanishing_order

__all__ = [
    "DegenerateParameter",
    "UnclassifiableTriple",
    "NoSquareRootInK",
    "ZeroDiscriminant",
    "MinimalityViolation",
    "FiberType",
    "Classification",
    "FiberRecord",
    "WeierstrassData",
    "family_coefficients",
    "family_forms",
    "cover_parameters",
    "cover_coefficients",
    "classify_fiber",
    "fiber_configuration",
    "fiber_configuration_ab",
    "confluent_configuration",
    "verify_twist",
    "patching_check",
    "j_function",
    "weierstrass_equation",
    "J_CLASSES",
]

S, T = Poly.var("S"), Poly.var("T")
X, Y, Z = Poly.var("X"), Poly.var("Y"), Poly.var("Z")

J_CLASSES = ("0", "1", "infinity", "other")


class DegenerateParameter(ValueError):
    """(a, b) = (0, 0), or (alpha, beta) = (0, 0)."""


class UnclassifiableTriple(ValueError):
    """An (orders, J class) pair that matches no Kodaira row."""


class NoSquareRootInK(ValueError):
    pass


class ZeroDiscriminant(ValueError):
    pass


class MinimalityViolation(ArithmeticError):
    pass


@dataclass(frozen=True)
class FiberType:
    """Kodaira symbol. ``family`` is one of I, I*, II, III, IV, IV*, III*, II*."""

    family: str
    n: int = 0

    def __str__(self):
        if self.family == "I":
            return f"I{self.n}"
        if self.family == "I*":
            return f"I{self.n}*"
        return self.family

    @classmethod
    def parse(cls, text: str) -> "FiberType":
        if text in ("II", "III", "IV", "IV*", "III*", "II*"):
            return cls(text)
        if text.startswith("I") and text.endswith("*") and text[1:-1].isdigit():
            return cls("I*", int(text[1:-1]))
        if text.startswith("I") and text[1:].isdigit():
            return cls("I", int(text[1:]))
        raise ValueError(f"unknown fiber type {text!r}")

    @property
    def euler_number(self) -> int:
        """Euler number of the fiber, equal to v(disc) for a minimal model."""
        return {
            "I": self.n, "I*": self.n + 6, "II": 2, "III": 3,
            "IV": 4, "IV*": 8, "III*": 9, "II*": 10,
        }[self.family]


@dataclass(frozen=True)
class Classification:
    type: FiberType
    e_p: int
    e_p_exact: bool


# (family, v2 rule, v3 rule, vd rule, J class, e_p)
# a rule is ("=", k) or (">=", k); for I_n and I_n^* the vd rule carries n.
_ROWS = [
    ("I", ("=", 0), ("=", 0), ("=", 0), "other", None),
    ("I", (">=", 1), ("=", 0), ("=", 0), "0", lambda v2, v3: 3 * v2),
    ("I", ("=", 0), (">=", 1), ("=", 0), "1", lambda v2, v3: 2 * v3),
    ("In", ("=", 0), ("=", 0), (">=", 1), "infinity", None),
    ("I*", ("=", 2), ("=", 3), ("=", 6), "other", None),
    ("I*", (">=", 3), ("=", 3), ("=", 6), "0", lambda v2, v3: 3 * v2 - 6),
    ("I*", ("=", 2), (">=", 4), ("=", 6), "1", lambda v2, v3: 2 * v3 - 6),
    ("In*", ("=", 2), ("=", 3), (">=", 7), "infinity", None),
    ("II", (">=", 1), ("=", 1), ("=", 2), "0", lambda v2, v3: 3 * v2 - 2),
    ("III", ("=", 1), (">=", 2), ("=", 3), "1", lambda v2, v3: 2 * v3 - 3),
    ("IV", (">=", 2), ("=", 2), ("=", 4), "0", lambda v2, v3: 3 * v2 - 4),
    ("IV*", (">=", 3), ("=", 4), ("=", 8), "0", lambda v2, v3: 3 * v2 - 8),
    ("III*", ("=", 3), (">=", 5), ("=", 9), "1", lambda v2, v3: 2 * v3 - 9),
    ("II*", (">=", 4), ("=", 5), ("=", 10), "0", lambda v2, v3: 3 * v2 - 10),
]


def _ok(rule, v):
    op, k = rule
    return v == k if op == "=" else v >= k


def _j_class_name(j_class) -> str:
    if j_class is None:
        return "infinity"
    if isinstance(j_class, str):
        if j_class in J_CLASSES:
            return j_class
        if j_class in ("inf", "∞"):
            return "infinity"
    value = FieldElem.coerce(j_class)
    if value == ZERO:
        return "0"
    if value == ONE:
        return "1"
    return "other"


def classify_fiber(orders, j_class, degree_one: bool = False) -> Classification:
    """Kodaira type and ramification index of J for a vanishing-order triple.

    ``j_class`` is "0", "1", "infinity", "other" or a J-value in K. The rows
    whose e_p entry is only a lower bound report 1; with ``degree_one`` the
    value is exact (J has degree one, so every ramification index is 1).
    """
    v2, v3, vd = (int(v) for v in orders)
    if min(v2, v3, vd) < 0:
        raise UnclassifiableTriple(f"negative order in {orders}")
    jc = _j_class_name(j_class)
    for fam, r2, r3, rd, row_j, ep in _ROWS:
        if row_j != jc or not (_ok(r2, v2) and _ok(r3, v3) and _ok(rd, vd)):
            continue
        if fam == "In":
            return Classification(FiberType("I", vd), vd, True)
        if fam == "In*":
            return Classification(FiberType("I*", vd - 6), vd - 6, True)
        if ep is None:
            return Classification(FiberType(fam), 1, degree_one)
        return Classification(FiberType(fam), ep(v2, v3), True)
    raise UnclassifiableTriple(f"orders {(v2, v3, vd)} with J class {jc} match no Kodaira row")


@dataclass(frozen=True)
class FiberRecord:
    position: tuple[FieldElem, FieldElem]
    type: FiberType
    orders: tuple[int, int, int]
    j_class: str
    j_value: FieldElem | None
    e_p: int
    e_p_exact: bool = True

    def as_dict(self) -> dict:
        return {
            "position": [format_field(self.position[0]), format_field(self.position[1])],
            "type": str(self.type),
            "orders": list(self.orders),
            "j_class": self.j_class,
            "e_p": self.e_p,
        }


@dataclass(frozen=True)
class WeierstrassData:
    g2: Poly
    g3: Poly
    params: dict = field(default_factory=dict, compare=False)

    @property
    def disc(self) -> Poly:
        return self.g2 ** 3 - 27 * self.g3 ** 2


def family_forms(a: Poly, b: Poly) -> WeierstrassData:
    """The family with polynomial parameters (used for the symbolic cases)."""
    L = a * T - b * S
    g2 = 27 * T * (T - S) * L ** 2
    g3 = 27 * T * (T - S) ** 2 * L ** 3
    return WeierstrassData(g2, g3, {"a": a, "b": b})


def family_coefficients(a, b) -> WeierstrassData:
    a, b = FieldElem.coerce(a), FieldElem.coerce(b)
    if not a and not b:
        raise DegenerateParameter("(a, b) = (0, 0) is not a point of P^1")
    data = family_forms(Poly.const(a), Poly.const(b))
    return WeierstrassData(data.g2, data.g3, {"a": a, "b": b})


def cover_parameters(alpha, beta) -> tuple[FieldElem, FieldElem]:
    """(a, b) = (E^2, F^3) at (alpha, beta)."""
    alpha, beta = FieldElem.coerce(alpha), FieldElem.coerce(beta)
    if not alpha and not beta:
        raise DegenerateParameter("(alpha, beta) = (0, 0) is not a point of P^1")
    at = {"alpha": alpha, "beta": beta}
    return poly_eval(octa.E, at) ** 2, poly_eval(octa.F, at) ** 3


def cover_coefficients(alpha, beta) -> WeierstrassData:
    alpha, beta = FieldElem.coerce(alpha), FieldElem.coerce(beta)
    a, b = cover_parameters(alpha, beta)
    data = family_coefficients(a, b)
    data.params.update(alpha=alpha, beta=beta)
    return data


def _expected_disc(a: Poly, b: Poly) -> Poly:
    return 27 ** 3 * T ** 2 * (T - S) ** 3 * (a * T - b * S) ** 6 * S


def _j_at(point) -> tuple[str, FieldElem | None]:
    s0, t0 = point
    if not s0:
        return "infinity", None
    j = t0 / s0
    return _j_class_name(j), j


def _normalize(point) -> tuple[FieldElem, FieldElem]:
    s0, t0 = (FieldElem.coerce(v) for v in point)
    if s0:
        return ONE, t0 / s0
    return ZERO, ONE


def _records(data: WeierstrassData, points) -> list[FiberRecord]:
    g2, g3, disc = data.g2, data.g3, data.disc
    seen, out = set(), []
    for p in points:
        p = _normalize(p)
        if p in seen:
            continue
        seen.add(p)
        orders = tuple(vanishing_order(f, p) for f in (g2, g3, disc))
        if orders[2] == 0:
            continue
        if orders[0] >= 4 and orders[1] >= 6:
            raise MinimalityViolation(f"non-minimal at {p}")
        jc, jv = _j_at(p)
        cls = classify_fiber(orders, jc, degree_one=True)
        out.append(FiberRecord(p, cls.type, orders, jc, jv, cls.e_p, cls.e_p_exact))
    if sum(r.orders[2] for r in out) != 12:
        raise ArithmeticError("singular fibers do not account for all of disc")
    return out


def fiber_configuration_ab(a, b) -> list[FiberRecord]:
    """Singular fibers of the member (a:b) of the family."""
    data = family_coefficients(a, b)
    a, b = data.params["a"], data.params["b"]
    if data.disc != _expected_disc(Poly.const(a), Poly.const(b)):
        raise ArithmeticError("discriminant does not factor as expected")
    return _records(data, [(ZERO, ONE), (ONE, ZERO), (ONE, ONE), (a, b)])


def fiber_configuration(alpha, beta) -> list[FiberRecord]:
    a, b = cover_parameters(alpha, beta)
    return fiber_configuration_ab(a, b)


def confluent_configuration(case: str) -> list[FiberRecord]:
    """Configuration on the whole locus E = 0, F = 0, V = 0 or generic.

    The parameters are polynomials in (alpha, beta) reduced modulo the
    vanishing invariant by means of E^2 = F^3 - 27 V^4. Vanishing orders are
    then taken over K[alpha, beta].
    """
    E, F, V = octa.E, octa.F, octa.V
    a, b = {
        "generic": (E ** 2, F ** 3),
        "E=0": (Poly.const(0), F ** 3),
        "F=0": (-27 * V ** 4, Poly.const(0)),
        "V=0": (F ** 3, F ** 3),
    }[case]
    data = family_forms(a, b)
    if data.disc != _expected_disc(a, b):
        raise ArithmeticError("discriminant does not factor as expected")
    points = [(ZERO, ONE), (ONE, ZERO), (ONE, ONE)]
    if case == "generic":
        # the I0* point (E^2 : F^3) is not K-rational over K[alpha, beta];
        # its orders are those of the cofactor power of (aT - bS)
        recs = _records_partial(data, points)
        return recs + [_generic_i0star(data)]
    return _records(data, points)


def _records_partial(data, points):
    out = []
    for p in points:
        orders = tuple(vanishing_order(f, p) for f in (data.g2, data.g3, data.disc))
        jc, jv = _j_at(p)
        cls = classify_fiber(orders, jc, degree_one=True)
        out.append(FiberRecord(p, cls.type, orders, jc, jv, cls.e_p, cls.e_p_exact))
    return out


def _generic_i0star(data) -> FiberRecord:
    # S = aU, T = bU + W turns aT - bS into aW; the order along the I0*
    # point is then the lowest power of W
    a, b = data.params["a"], data.params["b"]
    U, W = Poly.var("U"), Poly.var("W")
    orders = []
    for f in (data.g2, data.g3, data.disc):
        g = poly_substitute(f, {"S": a * U, "T": b * U + W})
        k = g.gens.index("W")
        orders.append(min(e[k] for e in g.terms))
    cls = classify_fiber(orders, "other", degree_one=True)
    return FiberRecord((ZERO, ZERO), cls.type, tuple(orders), "other", None, cls.e_p, True)


def verify_twist(a, b, k) -> dict:
    """Check the twist (a, b) -> (ka, kb) with (X, Y, Z) -> (kX, k sqrt(k) Y, Z)."""
    k = FieldElem.coerce(k)
    if not k:
        raise ValueError("k must be nonzero")
    root = field_sqrt(k)
    if root is None:
        raise NoSquareRootInK(f"{format_field(k)} is not a square in K")
    d0 = family_coefficients(a, b)
    d1 = family_coefficients(k * FieldElem.coerce(a), k * FieldElem.coerce(b))
    g2_ok = d1.g2 == d0.g2.scale(k ** 2)
    g3_ok = d1.g3 == d0.g3.scale(k ** 3)
    w0 = weierstrass_equation(d0)
    w1 = weierstrass_equation(d1)
    moved = poly_substitute(w1, {"X": X.scale(k), "Y": Y.scale(k * root)})
    eq_ok = moved == w0.scale(k ** 3)
    return {"k": k, "sqrt_k": root, "g2": g2_ok, "g3": g3_ok, "equation": eq_ok,
            "ok": g2_ok and g3_ok and eq_ok}


def patching_check() -> dict[str, bool]:
    """The cover family in its two charts E != 0 and V != 0.

    Chart 1 uses (X/E^2, Y/E^3) and chart 2 uses (X/V^4, Y/V^6); both sets of
    coefficients must be functions of (alpha : beta) alone, and the charts
    must agree under X2 = u^-2 X1, Y2 = u^-3 Y1 with u = V^2/E.
    """
    E, V = octa.E, octa.V
    data = family_forms(E ** 2, octa.F ** 3)
    ab = ("alpha", "beta")
    u = RationalFn(V ** 2, E)
    c1 = (RationalFn(data.g2, E ** 4), RationalFn(data.g3, E ** 6))
    c2 = (RationalFn(data.g2, V ** 8), RationalFn(data.g3, V ** 12))
    return {
        "g2 has degree 48 in (alpha, beta)": data.g2.is_homogeneous(ab, 48),
        "g3 has degree 72 in (alpha, beta)": data.g3.is_homogeneous(ab, 72),
        "chart weights E^4, E^6, V^8, V^12 match": (
            E.is_homogeneous(ab, 12) and V.is_homogeneous(ab, 6)),
        "g2 charts agree": c1[0] == c2[0] * u ** 4,
        "g3 charts agree": c1[1] == c2[1] * u ** 6,
    }


def weierstrass_equation(data: WeierstrassData) -> Poly:
    """Y^2 Z - 4 X^3 + g2 X Z^2 + g3 Z^3."""
    return Y ** 2 * Z - 4 * X ** 3 + data.g2 * X * Z ** 2 + data.g3 * Z ** 3


def j_function(data: WeierstrassData, normalization: str = "J") -> RationalFn:
    """J = g2^3 / disc, or j = 1728 J with ``normalization="j"``."""
    disc = data.disc
    if disc.is_zero():
        raise ZeroDiscriminant("disc vanishes identically")
    scale = 1728 if normalization == "j" else 1
    return RationalFn(data.g2 ** 3 * scale, disc)
