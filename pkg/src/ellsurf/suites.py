"""Named identity suites behind ``ellsurf verify``.

A check returns either a bool or a residual polynomial (zero means pass);
reports keep the first nonzero residual so failures are inspectable.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from . import lattice as lat
from . import octahedral as octa
from . import pencil as pen
from . import weierstrass as ws
from .field import FieldElem
from .poly import Poly, format_poly, poly_eval

__all__ = ["SUITES", "run_suite", "run_suites"]


def _invariants():
    return [(name, (lambda p=p: p)) for name, p in octa.catalog_identities()]


def _group():
    checks = [
        ("action table reproduced", lambda: octa.check_group_table() == []),
        ("closed: quaternion", lambda: octa.is_closed(octa.enumerate_group("quaternion"))),
        ("closed: tetrahedral", lambda: octa.is_closed(octa.enumerate_group("tetrahedral"))),
        ("closed: octahedral", lambda: octa.is_closed(octa.enumerate_group("octahedral"))),
    ]
    for N in (48,):
        for g in ("quaternion", "tetrahedral", "octahedral"):
            checks.append((f"molien {g} through t^{N}",
                           lambda g=g, N=N: octa.molien_series(g, N) == octa.hilbert_closed_form(g, N)))
    return checks


def _classifier(samples: int = 50, seed: int = 7):
    def generic():
        rng = random.Random(seed)
        want = [("I1", (0, 0, 1)), ("II", (1, 1, 2)), ("III", (1, 2, 3)), ("I0*", (2, 3, 6))]
        done = 0
        while done < samples:
            a = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
            b = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
            if not a or not b or a == b:
                continue
            recs = ws.fiber_configuration_ab(a, b)
            if [(str(r.type), r.orders) for r in recs] != want:
                return False
            done += 1
        return True

    def confluent(case, want):
        return lambda: [(str(r.type), r.orders) for r in ws.confluent_configuration(case)] == want

    patching = [(f"patching: {name}", lambda ok=ok: ok) for name, ok in ws.patching_check().items()]
    return [
        (f"{samples} random (a,b): [I1,II,III,I0*]", generic),
        ("E=0: I1* (2,3,7)", confluent("E=0", [("I1*", (2, 3, 7)), ("II", (1, 1, 2)), ("III", (1, 2, 3))])),
        ("F=0: IV* (3,4,8)", confluent("F=0", [("I1", (0, 0, 1)), ("IV*", (3, 4, 8)), ("III", (1, 2, 3))])),
        ("V=0: III* (3,5,9)", confluent("V=0", [("I1", (0, 0, 1)), ("II", (1, 1, 2)), ("III*", (3, 5, 9))])),
        *patching,
    ]


def _sections(bound: int = 5):
    def sweep():
        span = range(-bound, bound + 1)
        for n in product(span, repeat=3):
            s = lat.section_class(n)
            if not lat.is_numerical_section(s):
                return False
            if s != lat.section_class_components(n):
                return False
            if lat.mw_project(s) != tuple(Fraction(k, 2) for k in n):
                return False
            if lat.fiber_intersections(n) != lat.direct_intersections(s):
                return False
        return True

    def additivity():
        span = range(-2, 3)
        for n, m in product(product(span, repeat=3), repeat=2):
            total = tuple(x + y for x, y in zip(n, m))
            diff = lat.mw_add(lat.section_class(n), lat.section_class(m)) - lat.section_class(total)
            if lat.in_integer_span(diff) is None:
                return False
        return True

    def heights():
        basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        return all(
            lat.height_pairing(p, q)
            == lat.projected_height(lat.section_class(p), lat.section_class(q))
            == lat.shioda_height(lat.section_class(p), lat.section_class(q))
            == (Fraction(1, 2) if p == q else 0)
            for p in basis for q in basis)

    checks = [
        (f"section classes |n| <= {bound}", sweep),
        ("additivity modulo fiber components", additivity),
        ("height matrix diag(1/2,1/2,1/2)", heights),
        ("E8 roots", lambda: lat.e8_root_check() and lat.e8_root_check(extended=True)),
        ("Shioda-Tate ranks", lambda: all(
            lat.shioda_tate_report(c)["unimodular_check"] for c in lat.CASES)),
    ]
    for i, j in ((1, 2), (1, 3), (2, 3)):
        for sign in (1, -1):
            checks.append((f"generator ({i},{j}) sign {sign:+d} on the Weierstrass model",
                           lambda i=i, j=j, sign=sign: pen.theorem_residual(i, j, sign)))
    return checks


def _fibergroups(pairs: int = 10, seed: int = 11, alpha=1, beta=2):
    def mu_mult():
        rng = random.Random(seed)
        E = _at(octa.E, alpha, beta)
        curve = pen.nodal_member(E)
        done = 0
        while done < pairs:
            a = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            if a in (0, 1) or b in (0, 1) or a * b == 1:
                continue
            p, q = pen.mu_inverse(a, E), pen.mu_inverse(b, E)
            if pen.mu(pen.cubic_add(curve, p, q), E) != FieldElem(a * b):
                return False
            done += 1
        return True

    def nu_add():
        rng = random.Random(seed + 1)
        F = _at(octa.F, alpha, beta)
        curve = pen.cuspidal_member(F)
        done = 0
        while done < pairs:
            a = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            if not a or not b or a + b == 0:
                continue
            p, q = pen.nu_inverse(a, F), pen.nu_inverse(b, F)
            if pen.nu(pen.cubic_add(curve, p, q), F) != FieldElem(a + b):
                return False
            done += 1
        return True

    checks = [
        ("mu multiplicative", mu_mult),
        ("nu additive", nu_add),
        ("mu at base points = E_k^+/E_k^-",
         lambda: all(m == r for m, r in pen.mu_at_base_points(alpha, beta))),
        ("nu at base points = V_iV_j", lambda: _nu_base_points(alpha, beta)),
    ]
    for kind in ("degree6", "degree12"):
        for name, ok in pen.annihilator_check(kind).items():
            checks.append((f"{kind}: {name}", lambda ok=ok: ok))
    for name, ok in pen.xi_check().items():
        checks.append((f"xi: {name}", lambda ok=ok: ok))
    for name, ok in pen.fiber_group_relations().items():
        checks.append((name, lambda ok=ok: ok))
    for name, ok in pen.xi_subfield_relations().items():
        checks.append((name, lambda ok=ok: ok))
    return checks


def _at(p: Poly, alpha, beta) -> FieldElem:
    return poly_eval(p, {"alpha": FieldElem.coerce(alpha), "beta": FieldElem.coerce(beta)})


def _nu_base_points(alpha, beta):
    F = _at(octa.F, alpha, beta)
    pts = pen.base_point_values(alpha, beta)
    for k in (1, 2, 3):
        x, y = pts[2 * (k - 1)]
        if pen.nu((x, y, FieldElem(1)), F) != _at(octa.pair_product(k), alpha, beta):
            return False
    return True


def _pencil():
    checks = [
        ("V-forms of the invariants", lambda: all(pen.v_form_checks().values())),
        ("base points on both generating cubics", pen.base_point_check),
        ("common tangent Z = 0 at the flex", pen.tangency_check),
        ("base points permuted by the group", pen.monodromy_check),
        ("transform to the Weierstrass model", lambda: all(
            v for k, v in pen.transform_check().items() if k != "factor")),
    ]
    for name, data in pen.singular_members().items():
        checks.append((f"singular member {name}", lambda ok=data["check"]: ok))
    return checks


def _modulus():
    checks = []
    for group in (pen.modulus_relations(), pen.lambda_orbit(), pen.cremona_check()):
        for name, ok in group.items():
            checks.append((name, lambda ok=ok: ok))
    for name, ok in pen.torus_j_transfer().items():
        checks.append((name, lambda ok=ok: ok))
    return checks


SUITES = {
    "invariants": _invariants,
    "group": _group,
    "classifier": _classifier,
    "sections": _sections,
    "pencil": _pencil,
    "fibergroups": _fibergroups,
    "modulus": _modulus,
}


def run_suite(name: str) -> dict:
    results = []
    first_failure = None
    for label, fn in SUITES[name]():
        value = fn()
        if isinstance(value, Poly):
            ok = value.is_zero()
            residual = None if ok else format_poly(value)
        else:
            ok, residual = bool(value), None
        results.append({"name": label, "ok": ok})
        if not ok and first_failure is None:
            first_failure = {"name": label, "difference": residual}
    return {"suite": name, "ok": all(r["ok"] for r in results),
            "checks": results, "first_failure": first_failure}


def run_suites(which: str) -> dict:
    names = list(SUITES) if which == "all" else [which]
    reports = [run_suite(n) for n in names]
    return {"suites": reports, "ok": all(r["ok"] for r in reports)}
