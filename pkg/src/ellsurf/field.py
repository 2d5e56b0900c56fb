"""Exact arithmetic in K = Q(i, sqrt2).

Elements are stored on the fixed basis (1, i, r2, i*r2) where r2 = sqrt(2).
Each coordinate is a reduced rational (gmpy2.mpq), so equality is plain
coordinate comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction

import gmpy2
from gmpy2 import mpq

__all__ = [
    "FieldElem",
    "ZeroInverse",
    "ParseError",
    "field_make",
    "field_add",
    "field_neg",
    "field_mul",
    "field_inv",
    "parse_field",
    "format_field",
    "field_sqrt",
    "ZERO",
    "ONE",
    "I",
    "R2",
    "IR2",
]


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting the zero element of K."""


class ParseError(ValueError):
    pass


_Q0 = mpq(0)


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(Fraction(x).numerator, Fraction(x).denominator)
    return mpq(x)


class FieldElem:
    """c0 + c1*i + c2*r2 + c3*i*r2 with rational coordinates."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (_q(c0), _q(c1), _q(c2), _q(c3))

    @classmethod
    def _raw(cls, c):
        obj = object.__new__(cls)
        obj.c = c
        return obj

    @classmethod
    def coerce(cls, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, Fraction, type(_Q0))):
            return cls._raw((_q(x), _Q0, _Q0, _Q0))
        if isinstance(x, str):
            return parse_field(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into K")

    # coordinates as Fractions, for callers that do not want gmpy2 types
    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v.numerator), int(v.denominator)) for v in self.c)

    def is_zero(self) -> bool:
        a, b, c, d = self.c
        return not (a or b or c or d)

    def is_rational(self) -> bool:
        _, b, c, d = self.c
        return not (b or c or d)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.c == other.c
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(int(self.c[0].numerator), int(self.c[0].denominator)))
        return hash(self.c)

    def __add__(self, other):
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.c, other.c
        return FieldElem._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return FieldElem._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.c, other.c
        return FieldElem._raw((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (int, Fraction, type(_Q0))):
                k = _q(other)
                a = self.c
                return FieldElem._raw((a[0] * k, a[1] * k, a[2] * k, a[3] * k))
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        if not (b1 or b2 or b3):
            return FieldElem._raw((a0 * b0, a1 * b0, a2 * b0, a3 * b0))
        if not (a1 or a2 or a3):
            return FieldElem._raw((a0 * b0, a0 * b1, a0 * b2, a0 * b3))
        return FieldElem._raw((
            a0 * b0 - a1 * b1 + 2 * (a2 * b2 - a3 * b3),
            a0 * b1 + a1 * b0 + 2 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ))

    __rmul__ = __mul__

    def conj_i(self) -> "FieldElem":
        """Galois conjugate i -> -i."""
        a = self.c
        return FieldElem._raw((a[0], -a[1], a[2], -a[3]))

    def conj_r2(self) -> "FieldElem":
        """Galois conjugate sqrt2 -> -sqrt2."""
        a = self.c
        return FieldElem._raw((a[0], a[1], -a[2], -a[3]))

    def norm(self) -> Fraction:
        """Product of the four Galois conjugates (a rational number)."""
        n = self * self.conj_i() * self.conj_r2() * self.conj_i().conj_r2()
        assert n.is_rational()
        return n.coords[0]

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroInverse("0 has no inverse in K")
        a0, a1, a2, a3 = self.c
        if not (a1 or a2 or a3):
            return FieldElem._raw((1 / a0, _Q0, _Q0, _Q0))
        # b = a * conj_i(a) lies in Q(sqrt2); b * conj_r2(b) is rational
        ci = self.conj_i()
        b = self * ci
        cb = b.conj_r2()
        n = (b * cb).c[0]
        num = ci * cb
        inv_n = 1 / n
        return FieldElem._raw(tuple(v * inv_n for v in num.c))

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_complex(self) -> complex:
        """Floating embedding i -> 1j, sqrt2 -> +1.414...; diagnostics only."""
        a0, a1, a2, a3 = (float(v) for v in self.c)
        s = 2 ** 0.5
        return complex(a0 + a2 * s, a1 + a3 * s)

    def __repr__(self):
        return f"FieldElem({format_field(self)!r})"

    def __str__(self):
        return format_field(self)


ZERO = FieldElem()
ONE = FieldElem(1)
I = FieldElem(0, 1)
R2 = FieldElem(0, 0, 1)
IR2 = FieldElem(0, 0, 0, 1)


def field_make(c0=0, c1=0, c2=0, c3=0) -> FieldElem:
    return FieldElem(c0, c1, c2, c3)


def field_add(a, b) -> FieldElem:
    return FieldElem.coerce(a) + FieldElem.coerce(b)


def field_neg(a) -> FieldElem:
    return -FieldElem.coerce(a)


def field_mul(a, b) -> FieldElem:
    return FieldElem.coerce(a) * FieldElem.coerce(b)


def field_inv(a) -> FieldElem:
    return FieldElem.coerce(a).inverse()


# -- text format -----------------------------------------------------------

_BASIS_SUFFIX = ("", "*i", "*r2", "*i*r2")
_BASIS_BARE = ("", "i", "r2", "i*r2")


def _fmt_rat(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_field(a: FieldElem) -> str:
    """Render as ``p/q + p/q*i + p/q*r2 + p/q*i*r2`` omitting zero terms."""
    parts = []
    for k, v in enumerate(a.c):
        if not v:
            continue
        neg = v < 0
        mag = -v if neg else v
        if k and mag == 1:
            body = _BASIS_BARE[k]
        else:
            body = _fmt_rat(mag) + _BASIS_SUFFIX[k]
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_NUM_RE = re.compile(r"^\d+(/\d+)?$")


def parse_field(text: str) -> FieldElem:
    """Parse the exact-field text format (integer shorthand accepted)."""
    s = text.strip()
    if not s:
        raise ParseError("empty field element")
    pos = 0
    acc = [_Q0, _Q0, _Q0, _Q0]
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse field element {text!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ParseError(f"missing operator in {text!r}")
        first = False
        pos = m.end()
        coef = mpq(1)
        k = 0
        for factor in (f.strip() for f in body.split("*")):
            if factor == "i":
                if k in (1, 3):
                    raise ParseError(f"repeated i in {text!r}")
                k += 1
            elif factor == "r2":
                if k in (2, 3):
                    raise ParseError(f"repeated r2 in {text!r}")
                k += 2
            elif _NUM_RE.match(factor):
                if "/" in factor and int(factor.split("/")[1]) == 0:
                    raise ParseError(f"zero denominator in {text!r}")
                coef *= _q(factor)
            else:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
        if sign == "-":
            coef = -coef
        acc[k] += coef
    return FieldElem._raw(tuple(acc))


# -- square roots ------------------------------------------------------------

def _rat_sqrt(q):
    """Square root of a non-negative rational if it is rational, else None."""
    if q < 0:
        return None
    n, d = int(q.numerator), int(q.denominator)
    rn, rd = gmpy2.isqrt(n), gmpy2.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return mpq(rn, rd)
    return None


def _sqrt_q_sqrt2(u, v):
    """sqrt(u + v*sqrt2) as (p, q) with p + q*sqrt2, or None."""
    if not v:
        p = _rat_sqrt(u)
        if p is not None:
            return p, _Q0
        q = _rat_sqrt(u / 2)
        if q is not None:
            return _Q0, q
        return None
    n = _rat_sqrt(u * u - 2 * v * v)
    if n is None:
        return None
    for cand in ((u + n) / 2, (u - n) / 2):
        p = _rat_sqrt(cand)
        if p:
            return p, v / (2 * p)
    return None


def field_sqrt(a) -> FieldElem | None:
    """A square root of ``a`` inside K, or None when a is not a square in K."""
    a = FieldElem.coerce(a)
    if a.is_zero():
        return ZERO
    x0, x1, x2, x3 = a.c
    # a = A + B*i with A = x0 + x2*r2, B = x1 + x3*r2 in Q(sqrt2)
    A, B = FieldElem(x0, 0, x2), FieldElem(x1, 0, x3)
    candidates = []
    if B.is_zero():
        for target, unit in ((A, ONE), (-A, I)):
            r = _sqrt_q_sqrt2(target.c[0], target.c[2])
            if r is not None:
                candidates.append(FieldElem(r[0], 0, r[1]) * unit)
    else:
        m2 = A * A + B * B
        m = _sqrt_q_sqrt2(m2.c[0], m2.c[2])
        if m is not None:
            M = FieldElem(m[0], 0, m[1])
            for half in ((A + M) * Fraction(1, 2), (A - M) * Fraction(1, 2)):
                c = _sqrt_q_sqrt2(half.c[0], half.c[2])
                if c is None:
                    continue
                C = FieldElem(c[0], 0, c[1])
                if C.is_zero():
                    continue
                D = B / (C * 2)
                candidates.append(C + D * I)
    for s in candidates:
        if s * s == a:
            return s
    return None
