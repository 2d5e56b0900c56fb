"""The Neron-Severi lattice of the blown-up plane and the Mordell-Weil group.

Classes are integer vectors on (l, e1, ..., e9) with the form
diag(+1, -1, ..., -1). Base points are ordered so that (1,4), (2,5), (3,6)
lie on the three concurrent lines and 7, 8, 9 are infinitely near.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

__all__ = [
    "DivisorClass",
    "SectionIndex",
    "UnknownName",
    "NotNumericalSection",
    "gram",
    "named_class",
    "NAMES",
    "section_class",
    "section_class_components",
    "is_numerical_section",
    "mw_add",
    "mw_inverse",
    "mw_project",
    "height_pairing",
    "projected_height",
    "shioda_height",
    "fiber_intersections",
    "direct_intersections",
    "span_coefficients",
    "in_integer_span",
    "shioda_tate_report",
    "CASES",
    "e8_root_check",
]


class UnknownName(KeyError):
    pass


class NotNumericalSection(ValueError):
    pass


@dataclass(frozen=True)
class DivisorClass:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 10:
            raise ValueError("a divisor class has 10 coefficients")

    @classmethod
    def of(cls, *coeffs) -> "DivisorClass":
        return cls(tuple(coeffs))

    def __add__(self, o):
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o):
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, k):
        return DivisorClass(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def dot(self, o) -> int:
        return gram(self, o)

    def __str__(self):
        names = ["l"] + [f"e{k}" for k in range(1, 10)]
        out = ""
        for c, n in zip(self.coeffs, names):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = n if mag == 1 else f"{mag}{n}"
            out += f" {sign} {body}" if out else ("-" if c < 0 else "") + body
        return out or "0"


def gram(u: DivisorClass, v: DivisorClass) -> int:
    a, b = u.coeffs, v.coeffs
    return a[0] * b[0] - sum(a[k] * b[k] for k in range(1, 10))


def _basis(k: int) -> DivisorClass:
    c = [0] * 10
    c[k] = 1
    return DivisorClass(tuple(c))


ELL = _basis(0)
E = {k: _basis(k) for k in range(1, 10)}


def _r(*idx) -> DivisorClass:
    if len(idx) == 2:
        return E[idx[0]] - E[idx[1]]
    return ELL - E[idx[0]] - E[idx[1]] - E[idx[2]]


F_CLASS = 3 * ELL - sum((E[k] for k in range(2, 10)), E[1])

NAMES: dict[str, DivisorClass] = {
    "l": ELL,
    **{f"e{k}": E[k] for k in range(1, 10)},
    "f": F_CLASS,
    "s0": E[9],
    "u0": ELL - E[7] - E[8] - E[9],
    "u1": 2 * ELL - E[1] - E[2] - E[3] - E[4] - E[5] - E[6],
    "v0": E[8] - E[9],
    "v1": ELL - E[1] - E[4] - E[7],
    "v2": ELL - E[2] - E[5] - E[7],
    "v3": ELL - E[3] - E[6] - E[7],
    "v4": E[7] - E[8],
    **{f"r{i}{j}": _r(i, j) for i in range(1, 10) for j in range(1, 10) if i != j},
    **{f"r{i}{j}{k}": _r(i, j, k)
       for i in range(1, 10) for j in range(i + 1, 10) for k in range(j + 1, 10)},
}


def named_class(name: str) -> DivisorClass:
    try:
        return NAMES[name]
    except KeyError:
        raise UnknownName(name) from None


@dataclass(frozen=True)
class SectionIndex:
    n: tuple[int, int, int]

    @classmethod
    def of(cls, n1, n2, n3) -> "SectionIndex":
        return cls((int(n1), int(n2), int(n3)))

    @property
    def eps_i(self) -> tuple[int, int, int]:
        return tuple(k % 2 for k in self.n)

    @property
    def eps(self) -> int:
        return sum(self.eps_i)

    @property
    def half(self) -> int:
        return self.eps // 2

    @property
    def m(self) -> int:
        num = sum(k * k for k in self.n) - self.eps
        if num % 4:
            raise ArithmeticError(f"m is not integral for {self.n}")
        return num // 4

    def __neg__(self):
        return SectionIndex(tuple(-k for k in self.n))

    def __add__(self, o):
        return SectionIndex(tuple(a + b for a, b in zip(self.n, o.n)))


def _idx(n) -> SectionIndex:
    return n if isinstance(n, SectionIndex) else SectionIndex.of(*n)


def section_class(n) -> DivisorClass:
    """Divisor class of n1 s(e1) + n2 s(e2) + n3 s(e3) on (l, e1, ..., e9)."""
    idx = _idx(n)
    m, h, eps = idx.m, idx.half, idx.eps
    c = [3 * m + h * (eps - 1)]
    for ni, ei in zip(idx.n, idx.eps_i):
        c.append(-(m - (ni + ei) // 2 + h * ei))
    for ni, ei in zip(idx.n, idx.eps_i):
        c.append(-(m + (ni - ei) // 2 + h * ei))
    c += [-(m + h * (eps - 2))] * 2
    c.append(-(m + (1 - h) * (eps - 1)))
    return DivisorClass(tuple(c))


def section_class_components(n) -> DivisorClass:
    """Same class, rebuilt from the 0-section and the lattice generators."""
    idx = _idx(n)
    N = NAMES
    u0, v0, f = N["u0"], N["v0"], N["f"]
    v = [N["v1"], N["v2"], N["v3"]]
    s = E[9]
    for k in range(3):
        s = s + idx.n[k] * (E[k + 1] - E[9])
    for k in range(3):
        s = s - ((idx.n[k] - idx.eps_i[k]) // 2) * (u0 + v0 - v[k])
    tail = u0 + (idx.eps - 2) * v0 - N["v4"]
    for k in range(3):
        tail = tail - idx.eps_i[k] * v[k]
    return s - idx.half * tail + idx.m * f


def is_numerical_section(s: DivisorClass) -> bool:
    return gram(s, F_CLASS) == 1 and gram(s, s) == -1


def _require_section(*classes):
    for s in classes:
        if not is_numerical_section(s):
            raise NotNumericalSection(str(s))


def mw_add(s1: DivisorClass, s2: DivisorClass) -> DivisorClass:
    _require_section(s1, s2)
    s0 = E[9]
    d1, d2 = s1 - s0, s2 - s0
    return s0 + d1 + d2 - gram(d1, d2) * F_CLASS


def mw_inverse(n) -> DivisorClass:
    return section_class(-_idx(n))


_MW_ROOTS = (_r(1, 4), _r(2, 5), _r(3, 6))


def mw_project(s: DivisorClass) -> tuple[Fraction, Fraction, Fraction]:
    """Coordinates of s on (r14, r25, r36) after projecting to (U + L)-perp.

    The three roots are mutually orthogonal of square -2, so the Gram solve
    is diagonal: c_k = (s . r_k) / (r_k . r_k).
    """
    _require_section(s)
    for a, b in product(range(3), repeat=2):
        if a != b and gram(_MW_ROOTS[a], _MW_ROOTS[b]):
            raise ArithmeticError("projection roots are not orthogonal")
    return tuple(Fraction(gram(s, r), gram(r, r)) for r in _MW_ROOTS)


def height_pairing(n, n2) -> Fraction:
    """<s, s'> = (n . n') / 2 on A1* + A1* + A1*."""
    a, b = _idx(n).n, _idx(n2).n
    return Fraction(sum(x * y for x, y in zip(a, b)), 2)


def projected_height(s1: DivisorClass, s2: DivisorClass) -> Fraction:
    """Minus the pairing of the projections onto (U + L)-perp."""
    c1, c2 = mw_project(s1), mw_project(s2)
    return -sum(x * y * gram(r, r) for x, y, r in zip(c1, c2, _MW_ROOTS))


def shioda_height(s1: DivisorClass, s2: DivisorClass) -> Fraction:
    """Height pairing from the explicit formula with local contributions.

    <P, Q> = chi + (P.O) + (Q.O) - (P.Q) - sum of contr, with chi = 1, the
    A1 contribution 1/2 when both meet u1, and the D4 contribution 1 on the
    same far component of I0* and 1/2 on different far components.
    """
    _require_section(s1, s2)
    O = E[9]
    far = ("v1", "v2", "v3")
    contr = Fraction(0)
    if gram(s1, NAMES["u1"]) and gram(s2, NAMES["u1"]):
        contr += Fraction(1, 2)
    c1 = [k for k in far if gram(s1, NAMES[k])]
    c2 = [k for k in far if gram(s2, NAMES[k])]
    if c1 and c2:
        contr += 1 if c1 == c2 else Fraction(1, 2)
    return 1 + gram(s1, O) + gram(s2, O) - gram(s1, s2) - contr


def fiber_intersections(n) -> dict[str, int]:
    idx = _idx(n)
    e, h = idx.eps, idx.half
    out = {
        "u0": 1 - e + 2 * h,
        "u1": e - 2 * h,
        "v0": 1 - e + h * (2 * e - 3),
    }
    for k, ek in enumerate(idx.eps_i, start=1):
        out[f"v{k}"] = ek + h * (1 - 2 * ek)
    out["v4"] = 0
    return out


def direct_intersections(s: DivisorClass) -> dict[str, int]:
    return {k: gram(s, NAMES[k]) for k in ("u0", "u1", "v0", "v1", "v2", "v3", "v4")}


@lru_cache(maxsize=None)
def _eliminator(cols: tuple[tuple[int, ...], ...]):
    """(D, M) with integer M and M G = D [I; 0] for the 10 x k matrix G of columns ``cols``."""
    ncol = len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(ncol)] + [Fraction(int(i == k)) for k in range(10)]
            for i in range(10)]
    for r in range(ncol):
        p = next((i for i in range(r, 10) if rows[i][r]), None)
        if p is None:
            raise ValueError("generators are linearly dependent")
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][r]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(10):
            if i != r and rows[i][r]:
                k = rows[i][r]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[r])]
    denom = math.lcm(*(x.denominator for row in rows for x in row[ncol:]))
    return denom, tuple(tuple(int(x * denom) for x in row[ncol:]) for row in rows)


def span_coefficients(target: DivisorClass, gens) -> list[Fraction] | None:
    """Rational solution c of sum c_k g_k = target, or None if none exists.

    The generators are assumed linearly independent.
    """
    denom, m = _eliminator(tuple(g.coeffs for g in gens))
    reduced = [sum(x * t for x, t in zip(row, target.coeffs)) for row in m]
    ncol = len(gens)
    if any(reduced[ncol:]):
        return None
    return [Fraction(x, denom) for x in reduced[:ncol]]


FIBER_SPAN = ("f", "u1", "v1", "v2", "v3", "v4")


def in_integer_span(target: DivisorClass, names=FIBER_SPAN) -> list[int] | None:
    """Integer coefficients expressing target in the span of named classes."""
    sol = span_coefficients(target, [NAMES[k] for k in names])
    if sol is None or any(c.denominator != 1 for c in sol):
        return None
    return [int(c) for c in sol]


# root type -> (rank, determinant)
_ROOT_DATA = {"A1": (1, 2), "D4": (4, 4), "D5": (5, 4), "E6": (6, 3), "E7": (7, 2)}

CASES = {
    "generic": {"fibers": ["I1", "II", "III", "I0*"], "L": ["A1", "D4"],
                "mw_lattice": "A1*+A1*+A1*", "mw_gram": [[Fraction(1, 2), 0, 0],
                                                        [0, Fraction(1, 2), 0],
                                                        [0, 0, Fraction(1, 2)]], "no": 18},
    "E=0": {"fibers": ["I1*", "II", "III"], "L": ["A1", "D5"],
            "mw_lattice": "A1*+<1/4>", "mw_gram": [[Fraction(1, 2), 0], [0, Fraction(1, 4)]],
            "no": 30},
    "F=0": {"fibers": ["I1", "IV*", "III"], "L": ["A1", "E6"],
            "mw_lattice": "<1/6>", "mw_gram": [[Fraction(1, 6)]], "no": 49},
    "V=0": {"fibers": ["I1", "II", "III*"], "L": ["E7"],
            "mw_lattice": "A1*", "mw_gram": [[Fraction(1, 2)]], "no": 43},
}


def _det(m) -> Fraction:
    n = len(m)
    if n == 1:
        return Fraction(m[0][0])
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(n))


def shioda_tate_report(case: str) -> dict:
    """Ranks for one configuration, with det(MW) * det(L) = 1 checked."""
    data = CASES[case]
    rank_l = sum(_ROOT_DATA[t][0] for t in data["L"])
    det_l = 1
    for t in data["L"]:
        det_l *= _ROOT_DATA[t][1]
    rank_mw = 10 - 2 - rank_l
    gram_mw = data["mw_gram"]
    if len(gram_mw) != rank_mw:
        raise ArithmeticError(f"MW lattice rank mismatch in case {case}")
    det_mw = _det(gram_mw)
    return {
        "case": case,
        "fibers": list(data["fibers"]),
        "L_type": "+".join(data["L"]),
        "L_rank": rank_l,
        "MW_rank": rank_mw,
        "MW_lattice": data["mw_lattice"],
        "det_L": det_l,
        "det_MW": det_mw,
        "unimodular_check": det_mw * det_l == 1,
        "no": data["no"],
    }


E8_CHAIN = ("r12", "r23", "r34", "r45", "r56", "r67", "r78")


def e8_root_check(extended: bool = False) -> bool:
    """Self-pairing -2 and the E8 (or extended E8) adjacency of the simple roots."""
    names = list(E8_CHAIN) + ["r123"] + (["r89"] if extended else [])
    edges = {frozenset(p) for p in zip(names[:7], names[1:7])}
    edges.add(frozenset(("r34", "r123")))
    if extended:
        edges.add(frozenset(("r78", "r89")))
    for a in names:
        for b in names:
            g = gram(NAMES[a], NAMES[b])
            want = -2 if a == b else (1 if frozenset((a, b)) in edges else 0)
            if g != want:
                return False
    if gram(NAMES["r123"], F_CLASS) or gram(NAMES["r123"], E[9]):
        return False
    return all(gram(NAMES[a], F_CLASS) == 0 for a in names)
