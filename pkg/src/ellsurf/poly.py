"""Sparse multivariate polynomials and rational functions over K.

A :class:`Poly` stores a tuple of generator names and a dict from exponent
tuples to nonzero :class:`FieldElem` coefficients. Binary operations first
bring both operands onto the union of their generators.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product as _cartesian

from .field import ONE, ZERO, FieldElem, ParseError, format_field, I, R2

__all__ = [
    "Poly",
    "RationalFn",
    "MissingVariable",
    "ZeroForm",
    "var",
    "const",
    "poly_eval",
    "poly_substitute",
    "vanishing_order",
    "divide_linear",
    "parse_poly",
    "format_poly",
]

# preferred generator order; names outside this list sort after it
VAR_ORDER = (
    "alpha", "beta", "rho",
    "V1", "V2", "V3",
    "S", "T", "X", "Y", "Z",
    "x", "t",
)
_RANK = {v: k for k, v in enumerate(VAR_ORDER)}
ALIASES = {"α": "alpha", "β": "beta", "ρ": "rho"}


class MissingVariable(KeyError):
    pass


class ZeroForm(ValueError):
    pass


def _gen_key(name):
    return (_RANK.get(name, len(VAR_ORDER)), name)


def _merge_gens(g1, g2):
    if g1 == g2:
        return g1
    return tuple(sorted(set(g1) | set(g2), key=_gen_key))


class Poly:
    __slots__ = ("gens", "terms")

    def __init__(self, terms=None, gens=()):
        self.gens = tuple(gens)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = FieldElem.coerce(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def _raw(cls, gens, terms):
        p = object.__new__(cls)
        p.gens = gens
        p.terms = terms
        return p

    # -- construction ---------------------------------------------------

    @classmethod
    def var(cls, name: str) -> "Poly":
        name = ALIASES.get(name, name)
        return cls._raw((name,), {(1,): ONE})

    @classmethod
    def const(cls, c) -> "Poly":
        c = FieldElem.coerce(c)
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    def with_gens(self, gens) -> "Poly":
        """Same polynomial expressed over a superset of generators."""
        gens = tuple(gens)
        if gens == self.gens:
            return self
        idx = {g: k for k, g in enumerate(gens)}
        try:
            pos = [idx[g] for g in self.gens]
        except KeyError as exc:
            raise ValueError(f"generator {exc} missing from {gens}") from None
        n = len(gens)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for p, k in zip(pos, e):
                ne[p] = k
            terms[tuple(ne)] = c
        return Poly._raw(gens, terms)

    def trimmed(self) -> "Poly":
        """Drop generators that appear with exponent zero everywhere."""
        used = [k for k in range(len(self.gens)) if any(e[k] for e in self.terms)]
        if len(used) == len(self.gens):
            return self
        gens = tuple(self.gens[k] for k in used)
        return Poly._raw(gens, {tuple(e[k] for k in used): c for e, c in self.terms.items()})

    @staticmethod
    def _align(p, q):
        if p.gens == q.gens:
            return p, q
        gens = _merge_gens(p.gens, q.gens)
        return p.with_gens(gens), q.with_gens(gens)

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> FieldElem:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        for c in self.terms.values():
            return c
        return ZERO

    def variables(self) -> tuple[str, ...]:
        return self.trimmed().gens

    def degree(self, name=None) -> int:
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        if name not in self.gens:
            return 0
        k = self.gens.index(name)
        return max(e[k] for e in self.terms)

    def degree_in(self, names) -> int:
        """Max total degree in the listed generators (-1 for zero)."""
        if not self.terms:
            return -1
        ks = [self.gens.index(n) for n in names if n in self.gens]
        return max(sum(e[k] for k in ks) for e in self.terms)

    def is_homogeneous(self, names, d=None) -> bool:
        """All monomials have the same total degree in ``names`` (equal to d if given)."""
        ks = [self.gens.index(n) for n in names if n in self.gens]
        degs = {sum(e[k] for k in ks) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = Poly.coerce(other)
        p, q = Poly._align(self, other)
        terms = dict(p.terms)
        for e, c in q.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly._raw(p.gens, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def scale(self, k) -> "Poly":
        k = FieldElem.coerce(k)
        if not k:
            return Poly._raw(self.gens, {})
        return Poly._raw(self.gens, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction, FieldElem)):
                return self.scale(other)
            return NotImplemented
        p, q = Poly._align(self, other)
        if len(p.terms) < len(q.terms):
            p, q = q, p
        terms = {}
        get = terms.get
        qitems = list(q.terms.items())
        for e1, c1 in p.terms.items():
            for e2, c2 in qitems:
                e = tuple([a + b for a, b in zip(e1, e2)])
                c = c1 * c2
                s = get(e)
                terms[e] = c if s is None else s + c
        return Poly._raw(p.gens, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a nonzero constant."""
        if isinstance(other, Poly):
            other = other.constant_value()
        k = FieldElem.coerce(other)
        return self.scale(k.inverse())

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        t = self.trimmed()
        return hash((t.gens, frozenset(t.terms.items())))

    # -- evaluation / substitution -------------------------------------

    def coefficient(self, monomial: dict) -> FieldElem:
        """Coefficient of the monomial given as {name: exponent}."""
        e = tuple(monomial.get(g, 0) for g in self.gens)
        if any(n not in self.gens and k for n, k in monomial.items()):
            return ZERO
        return self.terms.get(e, ZERO)

    def eval(self, assignment: dict) -> FieldElem:
        return poly_eval(self, assignment)

    def subs(self, subs: dict) -> "Poly":
        return poly_substitute(self, subs)

    def map_coefficients(self, fn) -> "Poly":
        terms = {}
        for e, c in self.terms.items():
            c = fn(c)
            if c:
                terms[e] = c
        return Poly._raw(self.gens, terms)

    def sorted_terms(self):
        """Terms in graded reverse-lexicographic-free fixed order (deg desc, lex desc)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def var(name: str) -> Poly:
    return Poly.var(name)


def const(c) -> Poly:
    return Poly.const(c)


def poly_eval(p: Poly, assignment: dict) -> FieldElem:
    """Exact value of ``p`` at a point given as {name: FieldElem}."""
    assignment = {ALIASES.get(k, k): FieldElem.coerce(v) for k, v in assignment.items()}
    used = p.variables()
    missing = [g for g in used if g not in assignment]
    if missing:
        raise MissingVariable(", ".join(missing))
    pows = {}
    total = ZERO
    for e, c in p.terms.items():
        term = c
        for g, k in zip(p.gens, e):
            if k:
                key = (g, k)
                v = pows.get(key)
                if v is None:
                    v = pows[key] = assignment[g] ** k
                term = term * v
        total = total + term
    return total


def poly_substitute(p: Poly, subs: dict) -> Poly:
    """Compose ``p`` with ``subs`` (generators absent from ``subs`` are kept)."""
    subs = {ALIASES.get(k, k): Poly.coerce(v) for k, v in subs.items()}
    cache = {}

    def power(g, k):
        key = (g, k)
        r = cache.get(key)
        if r is None:
            if k == 1:
                r = subs[g]
            else:
                r = power(g, k // 2) * power(g, k - k // 2)
            cache[key] = r
        return r

    keep = [k for k, g in enumerate(p.gens) if g not in subs]
    keep_gens = tuple(p.gens[k] for k in keep)
    result = Poly._raw(keep_gens, {})
    # group terms by the kept part of the monomial to limit big multiplications
    groups = {}
    for e, c in p.terms.items():
        ke = tuple(e[k] for k in keep)
        se = tuple((g, k) for g, k in zip(p.gens, e) if k and g in subs)
        groups.setdefault(se, []).append((ke, c))
    for se, items in groups.items():
        factor = Poly.const(1)
        for g, k in se:
            factor = factor * power(g, k)
        result = result + factor * Poly._raw(keep_gens, dict(items))
    return result


def divide_linear(f: Poly, name: str, root: Poly):
    """Synthetic division of f by (name - root), viewing f as univariate in ``name``.

    ``root`` must not involve ``name``. Returns (quotient, remainder).
    """
    if name in root.variables():
        raise ValueError("root must not involve the division variable")
    f = f.with_gens(_merge_gens(f.gens, (name,)))
    k = f.gens.index(name)
    coeffs = {}
    for e, c in f.terms.items():
        d = e[k]
        rest = e[:k] + (0,) + e[k + 1:]
        coeffs.setdefault(d, {})[rest] = c
    if not coeffs:
        return Poly._raw(f.gens, {}), Poly._raw(f.gens, {})
    n = max(coeffs)
    x = Poly.var(name)
    q_coeffs = []
    carry = Poly._raw(f.gens, {})
    for d in range(n, 0, -1):
        carry = Poly._raw(f.gens, coeffs.get(d, {})) + carry
        q_coeffs.append((d - 1, carry))
        carry = carry * root
    remainder = Poly._raw(f.gens, coeffs.get(0, {})) + carry
    quotient = Poly._raw(f.gens, {})
    for d, c in q_coeffs:
        quotient = quotient + c * x ** d
    return quotient, remainder


def vanishing_order(f: Poly, point, s_name: str = "S", t_name: str = "T") -> int:
    """Multiplicity of the linear factor (t0*S - s0*T) in the binary form f.

    Coefficients of f may involve generators other than S, T (the order is
    then taken over the polynomial ring in those generators).
    """
    if f.is_zero():
        raise ZeroForm("vanishing order of the zero form")
    s0, t0 = (FieldElem.coerce(v) for v in point)
    if not s0 and not t0:
        raise ValueError("(0:0) is not a point of P^1")
    if s0:
        # t0*S - s0*T = -s0 * (T - (t0/s0) S)
        name, root = t_name, Poly.var(s_name).scale(t0 / s0)
    else:
        name, root = s_name, Poly.const(0)
    order = 0
    while True:
        q, r = divide_linear(f, name, root)
        if not r.is_zero():
            return order
        order += 1
        f = q


class RationalFn:
    """num/den with equality by cross-multiplication (no gcd normalisation)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = Poly.coerce(num), Poly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        return cls(Poly.coerce(x))

    def __add__(self, other):
        o = RationalFn.coerce(other)
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other):
        return RationalFn.coerce(other) - self

    def __mul__(self, other):
        o = RationalFn.coerce(other)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFn.coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFn(self.den ** (-n), self.num ** (-n))
        return RationalFn(self.num ** n, self.den ** n)

    def cross_difference(self, other) -> Poly:
        """n1*d2 - n2*d1; zero exactly when the two functions agree."""
        o = RationalFn.coerce(other)
        return self.num * o.den - o.num * self.den

    def equals(self, other, reduce=None) -> bool:
        d = self.cross_difference(other)
        if reduce is not None:
            d = reduce(d)
        return d.is_zero()

    def __eq__(self, other):
        try:
            return self.equals(other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def subs(self, subs: dict) -> "RationalFn":
        return RationalFn(poly_substitute(self.num, subs), poly_substitute(self.den, subs))

    def eval(self, assignment: dict) -> FieldElem:
        d = poly_eval(self.den, assignment)
        if not d:
            raise ZeroDivisionError("denominator vanishes at this point")
        return poly_eval(self.num, assignment) / d

    def __repr__(self):
        return f"RationalFn(({self.num}) / ({self.den}))"


# -- text format -----------------------------------------------------------

def _fmt_coef(c: FieldElem) -> str:
    s = format_field(c)
    nonzero = sum(1 for v in c.c if v)
    return f"({s})" if nonzero > 1 else s


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.sorted_terms():
        mono = "*".join(g if k == 1 else f"{g}^{k}" for g, k in zip(p.gens, e) if k)
        if not mono:
            body = _fmt_coef(c)
        elif c == ONE:
            body = mono
        elif c == -ONE:
            body = "-" + mono
        else:
            body = f"{_fmt_coef(c)}*{mono}"
        out.append(body)
    text = out[0]
    for body in out[1:]:
        if body.startswith("-") and not body.startswith("-("):
            text += " - " + body[1:]
        else:
            text += " + " + body
    return text


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_αβρ][A-Za-z_0-9αβρ]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def parse_poly(text: str) -> Poly:
    """Parse polynomials such as ``(1 + i)*alpha^2 - 3/2*S*T``.

    ``i`` and ``r2`` denote the field constants; other identifiers are
    generators (``α``, ``β`` are accepted for alpha, beta).
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        t = peek()
        pos += 1
        return t

    def expr():
        node = term()
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = unary()
        while peek() in (("op", "*"), ("op", "/")):
            _, op = take()
            rhs = unary()
            if op == "*":
                node = node * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by nonzero constants")
                node = node / rhs
        return node

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        node = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            node = node ** val
        return node

    def atom():
        kind, val = take()
        if kind == "num":
            return Poly.const(val)
        if kind == "name":
            if val == "i":
                return Poly.const(I)
            if val == "r2":
                return Poly.const(R2)
            return Poly.var(val)
        if (kind, val) == ("op", "("):
            node = expr()
            if take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return node
        raise ParseError(f"unexpected token {val!r}")

    if not toks:
        raise ParseError("empty polynomial")
    result = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input in {text!r}")
    return result
