"""The cubic pencil with its singular members and their group laws.

Symbolic identities live in K[V1, V2, V3, S, T, X, Y, Z] and are reduced
modulo the conic V1^2 + V2^2 + V3^2 = 0 by rewriting V3^2. Every identity is
also re-checked after substituting V_k = V_k(alpha, beta).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import octahedral as octa
from .field import I, ONE, R2, ZERO, FieldElem
from .poly import Poly, RationalFn, poly_eval, poly_substitute

__all__ = [
    "VertexDegeneration",
    "NodePoint",
    "CuspPoint",
    "SingularPointInput",
    "NotOnCurve",
    "ConfluentCase",
    "reduce_conic",
    "in_alpha_beta",
    "vanishes",
    "v_form_checks",
    "CubicPencil",
    "singular_members",
    "BasePoint",
    "base_points",
    "base_point_values",
    "base_point_check",
    "to_weierstrass",
    "transform_check",
    "section_generator",
    "theorem_check",
    "theorem_residual",
    "tangency_check",
    "monodromy_check",
    "PlaneCubic",
    "IDENTITY",
    "nodal_member",
    "cuspidal_member",
    "cubic_add",
    "cubic_neg",
    "mu",
    "mu_inverse",
    "nu",
    "nu_inverse",
    "mu_at_base_points",
    "singular_group_generators",
    "xi_values",
    "xi_check",
    "annihilator_check",
    "fiber_group_relations",
    "modulus_relations",
    "lambda_orbit",
    "torus_j_transfer",
    "xi_subfield_relations",
    "cremona_check",
]


class VertexDegeneration(ValueError):
    """Some V_i V_j vanishes, so a base point runs off to infinity."""


class NodePoint(ValueError):
    pass


class CuspPoint(ValueError):
    pass


class SingularPointInput(ValueError):
    pass


class NotOnCurve(ValueError):
    pass


class ConfluentCase(ValueError):
    """The requested singular fiber has merged with the I0* fiber."""


S, T = Poly.var("S"), Poly.var("T")
X, Y, Z = Poly.var("X"), Poly.var("Y"), Poly.var("Z")
V1, V2, V3 = Poly.var("V1"), Poly.var("V2"), Poly.var("V3")
Vs = {1: V1, 2: V2, 3: V3}
SQ2I = Poly.const(R2 * I)

# invariants written in the V_k
V_V = 2 * V1 * V2 * V3
F_V = 2 * (V1 ** 4 + V2 ** 4 + V3 ** 4)
Es_V = {1: V2 ** 2 - V3 ** 2, 2: V3 ** 2 - V1 ** 2, 3: V1 ** 2 - V2 ** 2}
E_V = -4 * Es_V[1] * Es_V[2] * Es_V[3]

PAIRS = octa.PAIRS


def w(k: int) -> Poly:
    i, j = PAIRS[k]
    return Vs[i] * Vs[j]


def Eplus_V(k: int) -> Poly:
    return SQ2I * Es_V[k] + 3 * w(k)


def Eminus_V(k: int) -> Poly:
    return SQ2I * Es_V[k] - 3 * w(k)


# -- reduction modulo the conic ---------------------------------------------

def reduce_conic(p: Poly) -> Poly:
    """Rewrite V3^2 -> -(V1^2 + V2^2) until V3 has degree at most 1."""
    if "V3" not in p.gens:
        return p
    k = p.gens.index("V3")
    q = -(V1 ** 2 + V2 ** 2)
    by_power: dict[int, dict] = {}
    for e, c in p.terms.items():
        by_power.setdefault(e[k], {})[e[:k] + (0,) + e[k + 1:]] = c
    powers = {0: Poly.const(1)}
    out = Poly.const(0)
    for d in sorted(by_power):
        half = d // 2
        if half not in powers:
            top = max(powers)
            acc = powers[top]
            for h in range(top + 1, half + 1):
                acc = acc * q
                powers[h] = acc
        part = Poly._raw(p.gens, by_power[d]) * powers[half]
        if d % 2:
            part = part * V3
        out = out + part
    return out.trimmed()


_AB = {"V1": octa.V1, "V2": octa.V2, "V3": octa.V3}


def in_alpha_beta(p: Poly) -> Poly:
    return poly_substitute(p, _AB)


def vanishes(p: Poly) -> bool:
    """True when p is zero on the conic, checked by both routes."""
    by_reduction = reduce_conic(p).is_zero()
    by_substitution = in_alpha_beta(p).is_zero()
    if by_reduction != by_substitution:
        raise ArithmeticError("conic reduction and (alpha, beta) substitution disagree")
    return by_reduction


def _rvanishes(f: RationalFn, g) -> bool:
    return vanishes(f.cross_difference(g))


def v_form_checks() -> dict[str, bool]:
    """The V-forms of V, E, F, E_k, E_k^+- agree with the (alpha, beta) catalog."""
    out = {
        "V": in_alpha_beta(V_V) == octa.V,
        "E": in_alpha_beta(E_V) == octa.E,
        "F": in_alpha_beta(F_V) == octa.F,
    }
    for k in (1, 2, 3):
        out[f"E{k}"] = in_alpha_beta(Es_V[k]) == octa.E_k(k)
        out[f"E{k}+"] = in_alpha_beta(Eplus_V(k)) == octa.Eplus(k)
        out[f"E{k}-"] = in_alpha_beta(Eminus_V(k)) == octa.Eminus(k)
    out["E^2 = F^3 - 27V^4"] = vanishes(E_V ** 2 - F_V ** 3 + 27 * V_V ** 4)
    return out


# -- the pencil ---------------------------------------------------------------

@dataclass(frozen=True)
class CubicPencil:
    """T * cubic_T - S * cubic_S."""

    cubic_T: Poly
    cubic_S: Poly

    @classmethod
    def family(cls, a, b) -> "CubicPencil":
        a, b = Poly.coerce(a), Poly.coerce(b)
        return cls(a * Y ** 2 * Z - 4 * X ** 3 + 27 * X * Z ** 2 + 27 * Z ** 3,
                   b * Y ** 2 * Z - 4 * X ** 3)

    @classmethod
    def octahedral(cls) -> "CubicPencil":
        return cls.family(E_V ** 2, F_V ** 3)

    def member(self, s=None, t=None) -> Poly:
        s = S if s is None else Poly.coerce(s)
        t = T if t is None else Poly.coerce(t)
        return t * self.cubic_T - s * self.cubic_S


def singular_members() -> dict[str, dict]:
    """The four singular members with their factorizations, each verified."""
    pen = CubicPencil.octahedral()
    line_product = Poly.const(1)
    for k in (1, 2, 3):
        line_product = line_product * (4 * w(k) ** 2 * X - F_V * Z)
    lines = 4 * V_V ** 4 * X ** 3 - F_V ** 3 * X * Z ** 2 - F_V ** 3 * Z ** 3
    nodal = E_V ** 2 * Y ** 2 * Z - (X - 3 * Z) * (2 * X + 3 * Z) ** 2
    cusp = F_V ** 3 * Y ** 2 * Z - 4 * X ** 3
    conic_line = (V_V ** 4 * Y ** 2 - X * Z - Z ** 2) * Z
    return {
        "I1": {"at": (0, 1), "cubic": nodal,
               "check": vanishes(pen.member(0, 1) - nodal)},
        "II": {"at": (1, 0), "cubic": cusp,
               "check": vanishes(pen.member(1, 0) + cusp)},
        "III": {"at": (1, 1), "cubic": conic_line,
                "check": vanishes(pen.member(1, 1) + 27 * conic_line)},
        "I0*": {"at": (E_V ** 2, F_V ** 3), "cubic": lines,
                "check": vanishes(pen.member(E_V ** 2, F_V ** 3) + 27 * lines)
                and vanishes(line_product - lines)},
    }


@dataclass(frozen=True)
class BasePoint:
    """Affine base point (F/(4w^2), sign/(4w^3)) with w = V_i V_j, or the
    infinitely-near triple point at (0:1:0) when ``k`` is None."""

    k: int | None
    sign: int = 1

    @property
    def x(self) -> RationalFn:
        return RationalFn(F_V, 4 * w(self.k) ** 2)

    @property
    def y(self) -> RationalFn:
        return RationalFn(Poly.const(self.sign), 4 * w(self.k) ** 3)

    def homogeneous(self) -> tuple[Poly, Poly, Poly]:
        """(X : Y : Z) = (F w : sign : 4 w^3)."""
        if self.k is None:
            return Poly.const(0), Poly.const(1), Poly.const(0)
        return F_V * w(self.k), Poly.const(self.sign), 4 * w(self.k) ** 3

    @property
    def multiplicity(self) -> int:
        return 3 if self.k is None else 1


def base_points() -> list[BasePoint]:
    pts = [BasePoint(k, s) for k in (1, 2, 3) for s in (1, -1)]
    return pts + [BasePoint(None)]


def base_point_values(alpha, beta) -> list[tuple[FieldElem, FieldElem]]:
    """The six affine base points at a concrete (alpha, beta)."""
    at = {"alpha": FieldElem.coerce(alpha), "beta": FieldElem.coerce(beta)}
    F = poly_eval(octa.F, at)
    out = []
    for k in (1, 2, 3):
        wk = poly_eval(octa.pair_product(k), at)
        if not wk:
            raise VertexDegeneration(f"V_iV_j vanishes for k = {k}")
        for s in (1, -1):
            out.append((F / (wk ** 2 * 4), FieldElem(s) / (wk ** 3 * 4)))
    return out


def _at_point(cubic: Poly, pt) -> Poly:
    x, y, z = pt
    return poly_substitute(cubic, {"X": x, "Y": y, "Z": z})


def base_point_check() -> bool:
    pen = CubicPencil.octahedral()
    for bp in base_points():
        pt = bp.homogeneous()
        if not (vanishes(_at_point(pen.cubic_T, pt)) and vanishes(_at_point(pen.cubic_S, pt))):
            return False
    return True


# -- transform to the Weierstrass model ----------------------------------------

def to_weierstrass(pt, a=None, b=None, s=None, t=None):
    """(X, Y, Z) -> ((T-S)P X, (T-S)P^2 Y, Z) with P = aT - bS."""
    a = E_V ** 2 if a is None else Poly.coerce(a)
    b = F_V ** 3 if b is None else Poly.coerce(b)
    s = S if s is None else Poly.coerce(s)
    t = T if t is None else Poly.coerce(t)
    P = a * t - b * s
    x, y, z = (Poly.coerce(c) for c in pt)
    return (t - s) * P * x, (t - s) * P ** 2 * y, z


def _weierstrass(a: Poly, b: Poly) -> Poly:
    P = a * T - b * S
    g2 = 27 * T * (T - S) * P ** 2
    g3 = 27 * T * (T - S) ** 2 * P ** 3
    return Y ** 2 * Z - 4 * X ** 3 + g2 * X * Z ** 2 + g3 * Z ** 3


def transform_check(a=None, b=None) -> dict:
    """W(transformed point) = (T-S)^2 (aT-bS)^3 * member, identically."""
    a = Poly.var("a") if a is None else Poly.coerce(a)
    b = Poly.var("b") if b is None else Poly.coerce(b)
    P = a * T - b * S
    pen = CubicPencil.family(a, b)
    moved = poly_substitute(_weierstrass(a, b), dict(zip("XYZ", to_weierstrass((X, Y, Z), a, b))))
    factor = (T - S) ** 2 * P ** 3
    member = pen.member()
    # P Y^2 Z = 4(T-S) X^3 - 27 T X Z^2 - 27 T Z^3, moved to one side
    transformed_cubic = (P * Y ** 2 * Z - 4 * (T - S) * X ** 3
                         + 27 * T * X * Z ** 2 + 27 * T * Z ** 3)
    return {
        "factor": "(T-S)^2 (aT-bS)^3",
        "holds": moved == factor * member,
        "member_matches_transformed_cubic": member == transformed_cubic,
    }


def section_generator(i: int, j: int, sign: int = 1) -> tuple[RationalFn, RationalFn]:
    """(X~/Z~, Y~/Z~) of the generator attached to the pair (i, j)."""
    if not (1 <= i < j <= 3):
        raise ValueError("need 1 <= i < j <= 3")
    wk = Vs[i] * Vs[j]
    P = E_V ** 2 * T - F_V ** 3 * S
    return (RationalFn(F_V * (T - S) * P, 4 * wk ** 2),
            RationalFn(sign * (T - S) * P ** 2, 4 * wk ** 3))


def theorem_residual(i: int, j: int, sign: int = 1) -> Poly:
    """64 (V_iV_j)^6 (Y^2 - 4X^3 + g2 X + g3) on the generator, reduced on the conic."""
    x, y = section_generator(i, j, sign)
    P = E_V ** 2 * T - F_V ** 3 * S
    g2 = 27 * T * (T - S) * P ** 2
    g3 = 27 * T * (T - S) ** 2 * P ** 3
    wk = Vs[i] * Vs[j]
    # x = x.num / (4 w^2), y = y.num / (4 w^3); multiply through by 64 w^6
    expr = (4 * y.num ** 2
            - 4 * x.num ** 3
            + 16 * wk ** 4 * g2 * x.num
            + 64 * wk ** 6 * g3)
    return reduce_conic(expr)


def theorem_check(i: int, j: int, sign: int = 1) -> bool:
    return theorem_residual(i, j, sign).is_zero()


def tangency_check() -> bool:
    """Every member meets Z = 0 only at (0:1:0), with multiplicity 3."""
    member = CubicPencil.octahedral().member()
    return poly_substitute(member, {"Z": Poly.const(0)}) == -4 * (T - S) * X ** 3


def monodromy_check() -> bool:
    """Each element of the binary octahedral group permutes the base points.

    V_k -> s V_j sends w_k to +- w_k'; F is invariant, and the Y sign flips
    with the sign of w (the Y coordinate is odd in w).
    """
    pts = {(bp.k, bp.sign) for bp in base_points() if bp.k is not None}
    F = octa.F
    for g in octa.enumerate_group("octahedral"):
        if octa.act(g, F) != F:
            return False
        sig = octa.action_signature(g)
        image = set()
        for k, s in pts:
            i, j = PAIRS[k]
            si, ti = sig.images[i - 1]
            sj, tj = sig.images[j - 1]
            knew = ({1, 2, 3} - {ti, tj}).pop()
            image.add((knew, s * si * sj))
        if image != pts:
            return False
    return True


# -- group laws on singular members --------------------------------------------

IDENTITY = (ZERO, ONE, ZERO)


@dataclass(frozen=True)
class PlaneCubic:
    """c Y^2 Z = a3 X^3 + a2 X^2 Z + a1 X Z^2 + a0 Z^3 over K."""

    c: FieldElem
    a3: FieldElem
    a2: FieldElem
    a1: FieldElem
    a0: FieldElem

    def rhs(self, x):
        return ((self.a3 * x + self.a2) * x + self.a1) * x + self.a0

    def drhs(self, x):
        return (self.a3 * 3 * x + self.a2 * 2) * x + self.a1

    def contains(self, pt) -> bool:
        x, y, z = pt
        lhs = self.c * y * y * z
        rhs = self.a3 * x ** 3 + self.a2 * x * x * z + self.a1 * x * z * z + self.a0 * z ** 3
        return lhs == rhs

    def is_singular_point(self, pt) -> bool:
        x, y, z = pt
        if not z:
            return False
        x, y = x / z, y / z
        return not y and not self.drhs(x) and not self.rhs(x)


def nodal_member(E) -> PlaneCubic:
    return PlaneCubic(FieldElem.coerce(E) ** 2, FieldElem(4), ZERO, FieldElem(-27), FieldElem(-27))


def cuspidal_member(F) -> PlaneCubic:
    return PlaneCubic(FieldElem.coerce(F) ** 3, FieldElem(4), ZERO, ZERO, ZERO)


def _affine(pt):
    x, y, z = (FieldElem.coerce(v) for v in pt)
    if not z:
        if x:
            raise NotOnCurve("point at infinity other than (0:1:0)")
        return None
    return x / z, y / z


def _check_input(curve: PlaneCubic, pt):
    pt = tuple(FieldElem.coerce(v) for v in pt)
    if not curve.contains(pt):
        raise NotOnCurve(str(pt))
    if curve.is_singular_point(pt):
        raise SingularPointInput("the singular point carries no group structure")
    return pt


def cubic_neg(curve: PlaneCubic, pt):
    x, y, z = _check_input(curve, pt)
    return (x, -y, z)


def cubic_add(curve: PlaneCubic, p, q):
    """Chord-tangent sum with identity (0:1:0); results are normalized to Z = 1."""
    p = _check_input(curve, p)
    q = _check_input(curve, q)
    ap, aq = _affine(p), _affine(q)
    if ap is None:
        return q if aq is None else (aq[0], aq[1], ONE)
    if aq is None:
        return (ap[0], ap[1], ONE)
    (x1, y1), (x2, y2) = ap, aq
    if x1 == x2:
        if y1 == -y2:
            return IDENTITY
        lam = curve.drhs(x1) / (curve.c * y1 * 2)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = (curve.c * lam * lam - curve.a2) / curve.a3 - x1 - x2
    y3 = lam * (x3 - x1) + y1
    return (x3, -y3, ONE)


_C = R2 * I * 3  # 3 sqrt2 i


def mu(pt, E, reciprocal: bool = False) -> FieldElem:
    """(2EY - 3 sqrt2 i (2X+3Z)) / (2EY + 3 sqrt2 i (2X+3Z)) on the nodal member."""
    E = FieldElem.coerce(E)
    x, y, z = (FieldElem.coerce(v) for v in pt)
    if not nodal_member(E).contains((x, y, z)):
        raise NotOnCurve(str(pt))
    num = E * y * 2 - _C * (x * 2 + z * 3)
    den = E * y * 2 + _C * (x * 2 + z * 3)
    if not num or not den:
        raise NodePoint("mu is 0 or infinity exactly at the node")
    return den / num if reciprocal else num / den


def mu_inverse(t, E):
    t, E = FieldElem.coerce(t), FieldElem.coerce(E)
    if t == ONE:
        return IDENTITY
    if not t:
        raise NodePoint("mu = 0 is the node")
    d = t - 1
    x = -(t * t + t * 10 + 1) * 3 / (d * d * 2)
    y = R2 * I * 54 * t * (t + 1) / (E * d ** 3)
    return (x, y, ONE)


def nu(pt, F) -> FieldElem:
    """X / (F Y) on the cuspidal member."""
    F = FieldElem.coerce(F)
    x, y, z = (FieldElem.coerce(v) for v in pt)
    if not cuspidal_member(F).contains((x, y, z)):
        raise NotOnCurve(str(pt))
    if not y:
        raise CuspPoint("nu is infinite exactly at the cusp")
    return x / (F * y)


def nu_inverse(v, F):
    v, F = FieldElem.coerce(v), FieldElem.coerce(F)
    if not v:
        return IDENTITY
    return (F / (v * v * 4), ONE / (v ** 3 * 4), ONE)


def _invariants_at(alpha, beta):
    at = {"alpha": FieldElem.coerce(alpha), "beta": FieldElem.coerce(beta)}
    return at, poly_eval(octa.E, at), poly_eval(octa.F, at)


def mu_at_base_points(alpha, beta) -> list[tuple[FieldElem, FieldElem]]:
    """(mu at the sign +1 base point of pair k, E_k^+/E_k^-) for k = 1..3."""
    at, E, F = _invariants_at(alpha, beta)
    pts = base_point_values(alpha, beta)
    out = []
    for k in (1, 2, 3):
        x, y = pts[2 * (k - 1)]
        ratio = poly_eval(octa.Eplus(k), at) / poly_eval(octa.Eminus(k), at)
        out.append((mu((x, y, ONE), E), ratio))
    return out


def singular_group_generators(kind: str, alpha, beta) -> list[FieldElem]:
    """Generators of the subgroup met by sections: E_k^+/E_k^- on I1, V_iV_j on II."""
    at, E, F = _invariants_at(alpha, beta)
    if kind == "I1":
        if not E:
            raise ConfluentCase("E = 0: the I1 fiber has merged into I1*")
        out = []
        for k in (1, 2, 3):
            den = poly_eval(octa.Eminus(k), at)
            if not den:
                raise ConfluentCase(f"E_{k}^- vanishes")
            out.append(poly_eval(octa.Eplus(k), at) / den)
        return out
    if kind == "II":
        if not F:
            raise ConfluentCase("F = 0: the II fiber has merged into IV*")
        return [poly_eval(octa.pair_product(k), at) for k in (1, 2, 3)]
    raise ValueError(f"unknown fiber kind {kind!r}")


# -- xi values and the annihilating polynomials ---------------------------------

def xi_values() -> tuple[RationalFn, RationalFn, RationalFn]:
    return tuple(RationalFn(F_V, 4 * w(k) ** 2) for k in (1, 2, 3))


def xi_check() -> dict[str, bool]:
    """Each xi_k solves 4 xi^3 - c xi - c with c = F^3/V^4, and sum/product rules."""
    xis = xi_values()
    c = RationalFn(F_V ** 3, V_V ** 4)
    out = {}
    for k, xi in enumerate(xis, start=1):
        out[f"cubic_{k}"] = _rvanishes(4 * xi ** 3 - c * xi - c, 0)
    out["sum"] = _rvanishes(xis[0] + xis[1] + xis[2], 0)
    out["product"] = _rvanishes(xis[0] * xis[1] * xis[2], c / 4)
    # c = 27 J0/(J0 - 1) with J0 = F^3/E^2
    J0 = RationalFn(F_V ** 3, E_V ** 2)
    out["c_is_27J0/(J0-1)"] = _rvanishes(c, 27 * J0 / (J0 - 1))
    return out


def annihilator_check(kind: str) -> dict[str, bool]:
    J0 = RationalFn(F_V ** 3, E_V ** 2)
    out = {}
    if kind == "degree6":
        for k in (1, 2, 3):
            x = RationalFn(Eplus_V(k), Eminus_V(k))
            for label, val in ((f"E{k}+/E{k}-", x), (f"E{k}-/E{k}+", 1 / x)):
                q = val ** 2 + 10 * val + 1
                expr = q ** 3 - 432 * J0 * val ** 2 * q + 3456 * J0 * val ** 3
                out[label] = _rvanishes(expr, 0)
            ident = x + 1 / x - (24 * RationalFn(F_V * Es_V[k], E_V) - 10)
            out[f"sum_identity_{k}"] = _rvanishes(ident, 0)
        return out
    if kind == "degree12":
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i == j:
                    continue
                for sgn in (1, -1):
                    x = RationalFn(sgn * Vs[i], Vs[j])
                    x2 = x ** 2
                    expr = (4 * (x2 ** 2 + x2 + 1) ** 3
                            - J0 * (x2 - 1) ** 2 * (2 * x2 + 1) ** 2 * (x2 + 2) ** 2)
                    out[f"{'-' if sgn < 0 else ''}V{i}/V{j}"] = _rvanishes(expr, 0)
        return out
    raise ValueError(f"unknown annihilator {kind!r}")


def fiber_group_relations() -> dict[str, bool]:
    """Polynomial relations behind the I1 and II generators."""
    out = {}
    for k in (1, 2, 3):
        i, j = PAIRS[k]
        ep, em = Eplus_V(k), Eminus_V(k)
        out[f"E{k}+ E{k}- = E{i} E{j}"] = vanishes(ep * em - Es_V[i] * Es_V[j])
        out[f"E = -4 E{k}+ E{k}- E{k}"] = vanishes(E_V + 4 * ep * em * Es_V[k])
        out[f"F + 6 w{k}^2 = -2 E{i} E{j}"] = vanishes(F_V + 6 * w(k) ** 2 + 2 * Es_V[i] * Es_V[j])
        out[f"E{k}+ + E{k}- = 2 sqrt2 i E{k}"] = vanishes(ep + em - 2 * SQ2I * Es_V[k])
        out[f"4 E{k}^3 - 3F E{k} + E = 0"] = vanishes(4 * Es_V[k] ** 3 - 3 * F_V * Es_V[k] + E_V)
    out["quartic"] = vanishes(
        w(3) ** 2 * w(2) ** 2 + w(3) ** 2 * w(1) ** 2 + w(2) ** 2 * w(1) ** 2)
    return out


# -- modulus, cross ratios and the associated torus ------------------------------

def modulus_relations() -> dict[str, bool]:
    rho = Poly.var("rho")
    one = Poly.const(1)
    kappa = RationalFn(2 * rho, one + rho ** 2)
    kappa_c = RationalFn(one - rho ** 2, one + rho ** 2)
    out = {
        "kappa^2 + kappa'^2 = 1": (kappa ** 2 + kappa_c ** 2).equals(1),
        "rho = kappa/(1+kappa')": (kappa / (kappa_c + 1)).equals(rho),
        "rho = 0": kappa.eval({"rho": 0}) == ZERO and kappa_c.eval({"rho": 0}) == ONE,
    }
    # i V1/V3 and i V2/V3 with rho = alpha/beta, by homogeneity
    a, b = Poly.var("alpha"), Poly.var("beta")
    iv1 = RationalFn(Poly.const(I) * octa.V1, octa.V3)
    iv2 = RationalFn(Poly.const(I) * octa.V2, octa.V3)
    out["kappa = i V1/V3"] = iv1.equals(RationalFn(2 * a * b, a ** 2 + b ** 2))
    out["kappa' = i V2/V3"] = iv2.equals(RationalFn(b ** 2 - a ** 2, a ** 2 + b ** 2))
    return out


def lambda_orbit() -> dict[str, bool]:
    E1, E2, E3 = Es_V[1], Es_V[2], Es_V[3]
    lam = RationalFn(-E2, E3)
    one = RationalFn(Poly.const(1))
    pairs = {
        "-E2/E3 = lambda": (RationalFn(-E2, E3), lam),
        "-E3/E2 = 1/lambda": (RationalFn(-E3, E2), one / lam),
        "-E1/E3 = 1-lambda": (RationalFn(-E1, E3), one - lam),
        "-E3/E1 = 1/(1-lambda)": (RationalFn(-E3, E1), one / (one - lam)),
        "-E1/E2 = (lambda-1)/lambda": (RationalFn(-E1, E2), (lam - 1) / lam),
        "-E2/E1 = lambda/(lambda-1)": (RationalFn(-E2, E1), lam / (lam - 1)),
    }
    out = {k: _rvanishes(f, g) for k, (f, g) in pairs.items()}
    # the orbit is closed under lambda -> 1/lambda and lambda -> 1 - lambda
    orbit = [g for f, g in pairs.values()]
    closed = True
    for g in orbit:
        for h in (one / g, one - g):
            closed &= any(_rvanishes(h, o) for o in orbit)
    out["closed under 1/l and 1-l"] = closed
    return out


def torus_j_transfer(alpha=None, beta=None) -> dict:
    xs = [RationalFn(-Es_V[k], Poly.const(3)) for k in (1, 2, 3)]
    g2 = -4 * (xs[0] * xs[1] + xs[0] * xs[2] + xs[1] * xs[2])
    g3 = 4 * xs[0] * xs[1] * xs[2]
    J0 = RationalFn(F_V ** 3, E_V ** 2)
    Jp = g2 ** 3 / (g2 ** 3 - 27 * g3 ** 2)
    out = {
        "sum x_k = 0": _rvanishes(xs[0] + xs[1] + xs[2], 0),
        "g2' = F/3": _rvanishes(g2, RationalFn(F_V, Poly.const(3))),
        "g3' = E/27": _rvanishes(g3, RationalFn(E_V, Poly.const(27))),
        "g2'^3 - 27 g3'^2 = (F^3 - E^2)/27": _rvanishes(
            g2 ** 3 - 27 * g3 ** 2, RationalFn(F_V ** 3 - E_V ** 2, Poly.const(27))),
        "J' = F^3/(F^3 - E^2)": _rvanishes(Jp, RationalFn(F_V ** 3, F_V ** 3 - E_V ** 2)),
        "J' = F^3/(27 V^4)": _rvanishes(Jp, RationalFn(F_V ** 3, 27 * V_V ** 4)),
        "J' = J0/(J0 - 1)": _rvanishes(Jp, J0 / (J0 - 1)),
    }
    if alpha is not None:
        at = {"alpha": FieldElem.coerce(alpha), "beta": FieldElem.coerce(beta)}
        F, V = poly_eval(octa.F, at), poly_eval(octa.V, at)
        out["J'_value"] = F ** 3 / (V ** 4 * 27)
    return out


def xi_subfield_relations() -> dict[str, bool]:
    xis = xi_values()
    out = {}
    for k in (1, 2, 3):
        i, j = PAIRS[k]
        xi = xis[k - 1]
        wk = w(k)
        d = RationalFn(Vs[i] ** 2 - Vs[j] ** 2, wk)
        out[f"((V{i}^2-V{j}^2)/(V{i}V{j}))^2 = xi{k} - 3"] = _rvanishes(d ** 2, xi - 3)
        s = RationalFn(Vs[i] ** 2 + Vs[j] ** 2, wk)
        out[f"(V{i}/V{j} + V{j}/V{i})^2 = xi{k} + 1"] = _rvanishes(s ** 2, xi + 1)
        # E_k^+/E_k^- through V_i/V_j; the cyclic order (i, j, k) fixes the sign
        ci, cj = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[k]
        num = SQ2I * (Vs[ci] ** 2 - Vs[cj] ** 2) + 3 * Vs[ci] * Vs[cj]
        den = SQ2I * (Vs[ci] ** 2 - Vs[cj] ** 2) - 3 * Vs[ci] * Vs[cj]
        r = RationalFn(Eplus_V(k), Eminus_V(k))
        out[f"E{k}+/E{k}- via V{ci}/V{cj}"] = _rvanishes(r, RationalFn(num, den))
        out[f"E{k}+/E{k}- + inverse = 2(2xi-15)/(2xi+3)"] = _rvanishes(
            r + 1 / r, 2 * (2 * xi - 15) / (2 * xi + 3))
        out[f"xi{i} + xi{j} = -xi{k}"] = _rvanishes(xis[i - 1] + xis[j - 1], -xi)
        out[f"xi{i} xi{j} = xi{k}^2/(xi{k}+1)"] = _rvanishes(
            xis[i - 1] * xis[j - 1], xi ** 2 / (xi + 1))
    return out


def cremona_check() -> dict[str, bool]:
    """(V1:V2:V3) -> (V2V3 : V1V3 : V1V2) carries the conic into the quartic."""
    W1, W2, W3 = V2 * V3, V1 * V3, V1 * V2
    quartic = W1 ** 2 * W2 ** 2 + W1 ** 2 * W3 ** 2 + W2 ** 2 * W3 ** 2
    conic = V1 ** 2 + V2 ** 2 + V3 ** 2
    return {
        "pullback = V1^2 V2^2 V3^2 * conic": quartic == (V1 * V2 * V3) ** 2 * conic,
        "image on quartic": vanishes(quartic),
    }
