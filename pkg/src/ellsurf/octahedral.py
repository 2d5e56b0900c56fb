"""Binary octahedral invariants, the group action table and Molien series.

Polynomials live in ``alpha, beta``. The 24 transformations of the action
table are kept verbatim (matrix together with the signed permutation it is
documented to induce on V1, V2, V3); the 48-element group is their +/- lift.
Nothing about the table is trusted: :func:`check_group_table` recomputes every
row from the matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .field import ONE, ZERO, FieldElem, I, R2
from .poly import Poly, poly_substitute

__all__ = [
    "V", "E", "F", "V1", "V2", "V3", "E1", "E2", "E3",
    "Eplus", "Eminus", "E_k", "pair_product", "catalog",
    "GroupElement", "SignedPermutation", "NotSignedPermutation",
    "NonRationalCoefficient",
    "enumerate_group", "act", "action_signature", "table_rows",
    "check_group_table", "is_closed", "sign_under", "invariant_signs",
    "signature_image", "all_signed_permutations", "PAIRS",
    "molien_series", "hilbert_closed_form", "catalog_identities",
    "GROUP_ORDERS",
]

alpha = Poly.var("alpha")
beta = Poly.var("beta")

V = 4 * alpha * beta * (alpha ** 4 - beta ** 4)
E = 8 * (alpha ** 4 + beta ** 4) * (alpha ** 8 - 34 * alpha ** 4 * beta ** 4 + beta ** 8)
F = 4 * (alpha ** 8 + 14 * alpha ** 4 * beta ** 4 + beta ** 8)

V1 = Poly.const(-2 * I) * alpha * beta
V2 = Poly.const(I) * (alpha ** 2 - beta ** 2)
V3 = alpha ** 2 + beta ** 2
_Vs = {1: V1, 2: V2, 3: V3}

E1 = V2 ** 2 - V3 ** 2
E2 = V3 ** 2 - V1 ** 2
E3 = V1 ** 2 - V2 ** 2
_Es = {1: E1, 2: E2, 3: E3}

# k -> the complementary pair (i, j), i < j
PAIRS = {1: (2, 3), 2: (1, 3), 3: (1, 2)}
_SQ2I = Poly.const(R2 * I)


def E_k(k: int) -> Poly:
    return _Es[k]


def pair_product(k: int) -> Poly:
    """V_i V_j for the pair complementary to k."""
    i, j = PAIRS[k]
    return _Vs[i] * _Vs[j]


def Eplus(k: int) -> Poly:
    return _SQ2I * _Es[k] + 3 * pair_product(k)


def Eminus(k: int) -> Poly:
    return _SQ2I * _Es[k] - 3 * pair_product(k)


def catalog() -> dict[str, Poly]:
    """Every named invariant polynomial, keyed by ascii name."""
    out = {"V": V, "E": E, "F": F, "V1": V1, "V2": V2, "V3": V3,
           "E1": E1, "E2": E2, "E3": E3}
    for k in (1, 2, 3):
        out[f"E{k}+"] = Eplus(k)
        out[f"E{k}-"] = Eminus(k)
    return out


def catalog_identities() -> list[tuple[str, Poly]]:
    """Named identities of the catalog as (label, difference) pairs.

    Each difference is expected to be the zero polynomial.
    """
    out = [
        ("V1^2+V2^2+V3^2=0", V1 ** 2 + V2 ** 2 + V3 ** 2),
        ("E^2=F^3-27V^4", E ** 2 - (F ** 3 - 27 * V ** 4)),
        ("V=2V1V2V3", V - 2 * V1 * V2 * V3),
        ("E=4(V1^2-V2^2)(V1^2-V3^2)(V2^2-V3^2)",
         E - 4 * (V1 ** 2 - V2 ** 2) * (V1 ** 2 - V3 ** 2) * (V2 ** 2 - V3 ** 2)),
        ("F=-4(V1^2V2^2+V1^2V3^2+V2^2V3^2)",
         F + 4 * (V1 ** 2 * V2 ** 2 + V1 ** 2 * V3 ** 2 + V2 ** 2 * V3 ** 2)),
        ("E1+E2+E3=0", E1 + E2 + E3),
        ("E1E2+E1E3+E2E3=-3/4F", E1 * E2 + E1 * E3 + E2 * E3 + F * Fraction(3, 4)),
        ("E1E2E3=-1/4E", E1 * E2 * E3 + E * Fraction(1, 4)),
        ("(VE)^2=F^3V^2-27(V^2)^3", (V * E) ** 2 - (F ** 3 * V ** 2 - 27 * (V ** 2) ** 3)),
    ]
    for k in (1, 2, 3):
        i, j = PAIRS[k]
        Ei, Ej, Ek = _Es[i], _Es[j], _Es[k]
        out += [
            (f"E{k}+E{k}-=E{i}E{j}", Eplus(k) * Eminus(k) - Ei * Ej),
            (f"E=-4E{k}+E{k}-E{k}", E + 4 * Eplus(k) * Eminus(k) * Ek),
            (f"E{k}++E{k}-=2r2iE{k}", Eplus(k) + Eminus(k) - 2 * _SQ2I * Ek),
            (f"4E{k}^3-3FE{k}+E=0", 4 * Ek ** 3 - 3 * F * Ek + E),
            (f"F+6(V{i}V{j})^2=-2E{i}E{j}", F + 6 * pair_product(k) ** 2 + 2 * Ei * Ej),
        ]
    return out


# -- the group -----------------------------------------------------------

class NotSignedPermutation(ValueError):
    pass


class NonRationalCoefficient(ArithmeticError):
    pass


@dataclass(frozen=True)
class SignedPermutation:
    """images[k-1] = (sign, j) meaning sigma*(V_k) = sign * V_j."""

    images: tuple[tuple[int, int], ...]

    def __call__(self, k: int) -> tuple[int, int]:
        return self.images[k - 1]

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self o other: apply ``other`` first, then ``self``."""
        out = []
        for k in (1, 2, 3):
            s1, j = other(k)
            s2, l = self(j)
            out.append((s1 * s2, l))
        return SignedPermutation(tuple(out))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        m = [[0] * 3 for _ in range(3)]
        for k, (s, j) in enumerate(self.images):
            m[j - 1][k] = s
        return tuple(tuple(r) for r in m)

    def det(self) -> int:
        m = self.matrix()
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def __str__(self):
        return ", ".join(f"V{k}->{'-' if s < 0 else ''}V{j}"
                         for k, (s, j) in enumerate(self.images, start=1))


@dataclass(frozen=True)
class GroupElement:
    """2x2 matrix (a, b, c, d) = [[a, b], [c, d]] over K with det 1."""

    matrix: tuple[FieldElem, FieldElem, FieldElem, FieldElem]
    row: int            # 1-based row of the action table
    sign: int           # +1 or -1 (the +/- of the table entry)
    tetrahedral: bool
    quaternion: bool

    def __mul__(self, other: "GroupElement"):
        return _mat_mul(self.matrix, other.matrix)

    def det(self) -> FieldElem:
        a, b, c, d = self.matrix
        return a * d - b * c

    def inverse_matrix(self):
        a, b, c, d = self.matrix
        return (d, -b, -c, a)

    def trace(self) -> FieldElem:
        return self.matrix[0] + self.matrix[3]


def _mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _K(s: str) -> FieldElem:
    return FieldElem.coerce(s)


_HALF = FieldElem(Fraction(1, 2))
_INV_SQRT2 = FieldElem(0, 0, Fraction(1, 2))

# (scale, (a, b, c, d), images of V1, V2, V3 as signed indices)
_TABLE = [
    # left list, upper block
    (ONE, ("1", "0", "0", "1"), (1, 2, 3)),
    # left list, middle block
    (ONE, ("i", "0", "0", "-i"), (1, -2, -3)),
    (ONE, ("0", "i", "i", "0"), (-1, 2, -3)),
    (ONE, ("0", "-1", "1", "0"), (-1, -2, 3)),
    # left list, lower block
    (_HALF, ("1+i", "-1+i", "1+i", "1-i"), (2, 3, 1)),
    (_HALF, ("1-i", "1-i", "-1-i", "1+i"), (3, 1, 2)),
    (_HALF, ("1+i", "1-i", "-1-i", "1-i"), (-2, 3, -1)),
    (_HALF, ("1-i", "-1+i", "1+i", "1+i"), (-3, -1, 2)),
    (_HALF, ("1-i", "1+i", "-1+i", "1+i"), (-2, -3, 1)),
    (_HALF, ("1+i", "-1-i", "1-i", "1-i"), (3, -1, -2)),
    (_HALF, ("1-i", "-1-i", "1-i", "1+i"), (2, -3, -1)),
    (_HALF, ("1+i", "1+i", "-1+i", "1-i"), (-3, 1, -2)),
    # right list, upper block
    (_INV_SQRT2, ("1+i", "0", "0", "1-i"), (1, 3, -2)),
    (_INV_SQRT2, ("1-i", "0", "0", "1+i"), (1, -3, 2)),
    (_INV_SQRT2, ("1", "i", "i", "1"), (-3, 2, 1)),
    (_INV_SQRT2, ("1", "-i", "-i", "1"), (3, 2, -1)),
    (_INV_SQRT2, ("1", "-1", "1", "1"), (2, -1, 3)),
    (_INV_SQRT2, ("1", "1", "-1", "1"), (-2, 1, 3)),
    # right list, lower block
    (_INV_SQRT2, ("0", "-1+i", "1+i", "0"), (-1, 3, 2)),
    (_INV_SQRT2, ("0", "1+i", "-1+i", "0"), (-1, -3, -2)),
    (_INV_SQRT2, ("i", "-1", "1", "-i"), (3, -2, 1)),
    (_INV_SQRT2, ("i", "1", "-1", "-i"), (-3, -2, -1)),
    (_INV_SQRT2, ("i", "i", "i", "-i"), (2, 1, -3)),
    (_INV_SQRT2, ("i", "-i", "-i", "-i"), (-2, -1, -3)),
]

GROUP_ORDERS = {"quaternion": 8, "tetrahedral": 24, "octahedral": 48}


def table_rows() -> list[tuple[tuple[FieldElem, ...], SignedPermutation]]:
    """The 24 coset representatives with their tabulated signed permutations."""
    rows = []
    for scale, entries, images in _TABLE:
        m = tuple(scale * _K(x) for x in entries)
        sp = SignedPermutation(tuple((1 if v > 0 else -1, abs(v)) for v in images))
        rows.append((m, sp))
    return rows


@lru_cache(maxsize=None)
def _all_elements() -> tuple[GroupElement, ...]:
    out = []
    for row, (m, _) in enumerate(table_rows(), start=1):
        for sign in (1, -1):
            mm = m if sign == 1 else tuple(-x for x in m)
            out.append(GroupElement(mm, row, sign, tetrahedral=row <= 12, quaternion=row <= 4))
    return tuple(out)


def enumerate_group(which: str = "octahedral") -> list[GroupElement]:
    if which not in GROUP_ORDERS:
        raise ValueError(f"unknown group {which!r}")
    elems = _all_elements()
    if which == "quaternion":
        return [g for g in elems if g.quaternion]
    if which == "tetrahedral":
        return [g for g in elems if g.tetrahedral]
    return list(elems)


def is_closed(elements) -> bool:
    mats = {g.matrix for g in elements}
    return all(_mat_mul(a, b) in mats for a in mats for b in mats)


def act(sigma, p: Poly) -> Poly:
    """Contragredient action p o sigma^{-1} on a polynomial in alpha, beta."""
    if isinstance(sigma, GroupElement):
        a, b, c, d = sigma.inverse_matrix()
    else:
        a, b, c, d = sigma
        det = a * d - b * c
        a, b, c, d = d / det, -b / det, -c / det, a / det
    new_alpha = alpha.scale(a) + beta.scale(b)
    new_beta = alpha.scale(c) + beta.scale(d)
    return poly_substitute(p, {"alpha": new_alpha, "beta": new_beta})


def action_signature(sigma) -> SignedPermutation:
    images = []
    for k in (1, 2, 3):
        img = act(sigma, _Vs[k])
        for j in (1, 2, 3):
            if img == _Vs[j]:
                images.append((1, j))
                break
            if img == -_Vs[j]:
                images.append((-1, j))
                break
        else:
            raise NotSignedPermutation(f"sigma*(V{k}) = {img} is not +/- some V_j")
    return SignedPermutation(tuple(images))


def check_group_table() -> list[tuple[int, SignedPermutation, SignedPermutation]]:
    """Rows whose computed signature differs from the tabulated one (empty if none)."""
    bad = []
    for row, (m, tab) in enumerate(table_rows(), start=1):
        got = action_signature(m)
        if got != tab:
            bad.append((row, tab, got))
    return bad


def sign_under(sigma, p: Poly) -> int:
    """+1 or -1 if sigma*(p) = +/-p; 0 otherwise."""
    img = act(sigma, p)
    if img == p:
        return 1
    if img == -p:
        return -1
    return 0


# -- Molien and Hilbert-Poincare series ----------------------------------

def _inverse_series_quadratic(c: FieldElem, N: int) -> list[FieldElem]:
    """Coefficients of 1/(1 - c t + t^2) up to t^N via u_n = c u_{n-1} - u_{n-2}."""
    u = [ONE]
    if N >= 1:
        u.append(c)
    for n in range(2, N + 1):
        u.append(c * u[n - 1] - u[n - 2])
    return u[: N + 1]


def molien_series(which: str, N: int) -> list[int]:
    """Coefficients t^0..t^N of (1/|G|) sum_A 1/det(I - tA), computed in K."""
    if N < 0:
        raise ValueError("N must be non-negative")
    elems = enumerate_group(which)
    acc = [ZERO] * (N + 1)
    # det(I - tA) = 1 - tr(A) t + t^2 for det A = 1; group elements by trace
    by_trace: dict[FieldElem, int] = {}
    for g in elems:
        if g.det() != ONE:
            raise ArithmeticError("group element with determinant != 1")
        by_trace[g.trace()] = by_trace.get(g.trace(), 0) + 1
    for tr, mult in by_trace.items():
        for n, v in enumerate(_inverse_series_quadratic(tr, N)):
            acc[n] = acc[n] + v * mult
    order = len(elems)
    out = []
    for n, v in enumerate(acc):
        v = v * Fraction(1, order)
        if not v.is_rational():
            raise NonRationalCoefficient(f"coefficient of t^{n} is {v}")
        q = v.coords[0]
        if q.denominator != 1 or q < 0:
            raise NonRationalCoefficient(f"coefficient of t^{n} is {q}, not a natural number")
        out.append(int(q))
    return out


# closed forms: numerator exponents, denominator factors (1 - t^d)
_CLOSED_FORMS = {
    "quaternion": ((0, 6), (4, 4)),
    "tetrahedral": ((0, 12), (6, 8)),
    "octahedral": ((0, 18), (8, 12)),
}


def hilbert_closed_form(which: str, N: int) -> list[int]:
    """Power series of the closed-form Hilbert-Poincare series, integer arithmetic."""
    if N < 0:
        raise ValueError("N must be non-negative")
    num_exps, den_degs = _CLOSED_FORMS[which]
    series = [0] * (N + 1)
    for e in num_exps:
        if e <= N:
            series[e] += 1
    for d in den_degs:
        # multiply by 1/(1 - t^d)
        for n in range(d, N + 1):
            series[n] += series[n - d]
    return series


def invariant_signs() -> list[tuple[GroupElement, int, int, int]]:
    """(sigma, sign on V, sign on E, sign on F) for all 48 elements."""
    return [(g, sign_under(g, V), sign_under(g, E), sign_under(g, F))
            for g in enumerate_group("octahedral")]


def signature_image() -> set[SignedPermutation]:
    return {action_signature(g) for g in enumerate_group("octahedral")}


def all_signed_permutations() -> list[SignedPermutation]:
    out = []
    for perm in permutations((1, 2, 3)):
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    out.append(SignedPermutation(((s1, perm[0]), (s2, perm[1]), (s3, perm[2]))))
    return out
