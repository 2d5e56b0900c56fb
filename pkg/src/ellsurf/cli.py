"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 usage error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from . import lattice as lat
from . import octahedral as octa
from . import pencil as pen
from . import weierstrass as ws
from .field import ONE, FieldElem, ParseError, format_field, parse_field
from .poly import RationalFn, poly_eval

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


def _K(text: str) -> FieldElem:
    try:
        return parse_field(text)
    except ParseError as exc:
        raise UsageError(str(exc)) from None


def _rat(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected n1,n2,n3 but got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"expected integers in {text!r}") from None


# -- subcommands ---------------------------------------------------------------

def cmd_classify(args) -> dict:
    if args.alpha is not None or args.beta is not None:
        if args.alpha is None or args.beta is None or args.a is not None or args.b is not None:
            raise UsageError("give either --alpha/--beta or --a/--b")
        alpha, beta = _K(args.alpha), _K(args.beta)
        a, b = ws.cover_parameters(alpha, beta)
        params = {"alpha": format_field(alpha), "beta": format_field(beta),
                  "a": format_field(a), "b": format_field(b)}
    else:
        if args.a is None or args.b is None:
            raise UsageError("give either --alpha/--beta or --a/--b")
        a, b = _K(args.a), _K(args.b)
        params = {"a": format_field(a), "b": format_field(b)}
    fibers = ws.fiber_configuration_ab(a, b)
    j0 = "infinity" if not a else format_field(b / a)
    return {"params": params, "J0": j0, "fibers": [f.as_dict() for f in fibers]}


def cmd_fibers(args) -> dict:
    alpha, beta = _K(args.alpha), _K(args.beta)
    at = {"alpha": alpha, "beta": beta}
    out = {"params": {"alpha": format_field(alpha), "beta": format_field(beta)},
           "base_points": [[format_field(x), format_field(y)]
                           for x, y in pen.base_point_values(alpha, beta)]}
    groups, notes = {}, []
    for kind in ("I1", "II"):
        try:
            groups[kind] = [format_field(v) for v in pen.singular_group_generators(kind, alpha, beta)]
        except pen.ConfluentCase as exc:
            groups[kind] = None
            notes.append(str(exc))
    out["generators"] = groups
    out["invariants"] = {k: format_field(poly_eval(p, at))
                         for k, p in (("E", octa.E), ("F", octa.F), ("V", octa.V))}
    if notes:
        out["notes"] = notes
    return out


def _section_payload(n) -> dict:
    s = lat.section_class(n)
    return {
        "n": list(n),
        "class": list(s.coeffs),
        "class_text": str(s),
        "numerical_section": lat.is_numerical_section(s),
        "intersections": lat.fiber_intersections(n),
        "projection": [_rat(c) for c in lat.mw_project(s)],
        "height": _rat(lat.height_pairing(n, n)),
    }


def cmd_section(args) -> dict:
    n = _triple(args.n)
    payload = _section_payload(n)
    if lat.fiber_intersections(n) != lat.direct_intersections(lat.section_class(n)):
        raise RuntimeError("closed-form intersections disagree with the Gram matrix")
    return payload


def cmd_mw(args) -> dict:
    n, m = (_triple(t) for t in args.add)
    total = tuple(x + y for x, y in zip(n, m))
    s = lat.mw_add(lat.section_class(n), lat.section_class(m))
    target = lat.section_class(total)
    coeffs = lat.in_integer_span(s - target)
    payload = {
        "summands": [list(n), list(m)],
        "sum_class": list(s.coeffs),
        "index_sum": list(total),
        "section_class": list(target.coeffs),
        "deviation": None if coeffs is None else dict(zip(lat.FIBER_SPAN, coeffs)),
        "ok": coeffs is not None,
    }
    if coeffs is None:
        raise CheckFailed(payload)
    return payload


def cmd_molien(args) -> dict:
    if args.degree < 0:
        raise UsageError("--degree must be non-negative")
    series = octa.molien_series(args.group, args.degree)
    closed = octa.hilbert_closed_form(args.group, args.degree)
    payload = {"group": args.group, "degree": args.degree,
               "coefficients": series, "closed_form_matches": series == closed}
    if series != closed:
        raise CheckFailed(payload)
    return payload


def cmd_group_table(args) -> dict:
    rows = []
    for idx, (mat, sig) in enumerate(octa.table_rows(), start=1):
        rows.append({"row": idx, "matrix": [format_field(x) for x in mat],
                     "signature": str(sig)})
    mismatches = octa.check_group_table()
    payload = {"rows": rows, "matches_table": not mismatches}
    if mismatches:
        raise CheckFailed(payload)
    return payload


def cmd_verify(args) -> dict:
    from .suites import run_suites
    report = run_suites(args.suite)
    if not report["ok"]:
        raise CheckFailed(report)
    return report


def cmd_eval_section(args) -> dict:
    alpha, beta, s, t = _K(args.alpha), _K(args.beta), _K(args.s), _K(args.t)
    if not re.fullmatch(r"[123]{2}", args.pair) or args.pair[0] >= args.pair[1]:
        raise UsageError("--pair must be 12, 13 or 23")
    i, j = int(args.pair[0]), int(args.pair[1])
    sign = {"+": 1, "-": -1}[args.sign]
    at = {"alpha": alpha, "beta": beta}
    values = {f"V{k}": poly_eval(p, at) for k, p in ((1, octa.V1), (2, octa.V2), (3, octa.V3))}
    if not values[f"V{i}"] or not values[f"V{j}"]:
        raise pen.VertexDegeneration(f"V{i}V{j} vanishes at this parameter")
    values.update(S=s, T=t)
    x, y = (f.eval(values) for f in pen.section_generator(i, j, sign))
    data = ws.cover_coefficients(alpha, beta)
    g2 = poly_eval(data.g2, {"S": s, "T": t})
    g3 = poly_eval(data.g3, {"S": s, "T": t})
    on_curve = y * y == x ** 3 * 4 - g2 * x - g3
    payload = {"params": {"alpha": format_field(alpha), "beta": format_field(beta),
                          "s": format_field(s), "t": format_field(t)},
               "pair": [i, j], "sign": args.sign,
               "point": [format_field(x), format_field(y), format_field(ONE)],
               "on_curve": on_curve}
    if not on_curve:
        raise RuntimeError("generator is off the Weierstrass curve")
    return payload


# -- parser and output -------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # every option is long, so -1,2,0 or -1/2 or -i*r2 is a value
        self._negative_number_matcher = re.compile(r"^-(\d|i$|i\*|r2)")

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--meta", action="store_true", default=argparse.SUPPRESS,
                        help="add version and timestamp outside the data")
    p = _Parser(prog="ellsurf", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[common], **kw)

    c = sub.add_parser("classify", help="singular fibers of one member of the family")
    c.add_argument("--a")
    c.add_argument("--b")
    c.add_argument("--alpha")
    c.add_argument("--beta")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("fibers", help="base points and singular-fiber group generators")
    c.add_argument("--alpha", required=True)
    c.add_argument("--beta", required=True)
    c.set_defaults(func=cmd_fibers)

    c = sub.add_parser("section", help="divisor class of n1 s(e1) + n2 s(e2) + n3 s(e3)")
    c.add_argument("--n", required=True, help="n1,n2,n3")
    c.set_defaults(func=cmd_section)

    c = sub.add_parser("mw", help="Mordell-Weil addition on divisor classes")
    c.add_argument("--add", nargs=2, required=True, metavar="N1,N2,N3")
    c.set_defaults(func=cmd_mw)

    c = sub.add_parser("molien", help="Molien series coefficients")
    c.add_argument("--group", choices=("quaternion", "tetrahedral", "octahedral"), default="octahedral")
    c.add_argument("--degree", type=int, default=48)
    c.set_defaults(func=cmd_molien)

    c = sub.add_parser("group-table", help="the 24 coset rows with their signed permutations")
    c.set_defaults(func=cmd_group_table)

    c = sub.add_parser("verify", help="run identity suites")
    from .suites import SUITES
    c.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("eval-section", help="evaluate a section generator at (alpha:beta), (S:T)")
    for flag in ("--alpha", "--beta", "--s", "--t"):
        c.add_argument(flag, required=True)
    c.add_argument("--pair", required=True, help="12, 13 or 23")
    c.add_argument("--sign", choices=("+", "-"), default="+")
    c.set_defaults(func=cmd_eval_section)
    return p


def _is_flat(v) -> bool:
    return not isinstance(v, (dict, list)) or (
        isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v))


def _text(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if _is_flat(v):
                lines.append(f"{pad}{k}: {_scalar(v)}")
            else:
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
    else:
        for item in value:
            if _is_flat(item):
                lines.append(f"{pad}- {_scalar(item)}")
            else:
                lines.append(f"{pad}-")
                lines += _text(item, indent + 1)
    return lines


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(command: str, data, fmt: str, meta: bool, status: str) -> str:
    doc = {"command": command, "status": status, "data": data}
    if meta:
        doc["meta"] = {"version": __version__,
                       "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds")}
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return "\n".join(_text(doc))


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        data = args.func(args)
        code, status = EXIT_OK, "ok"
    except CheckFailed as exc:
        data, code, status = exc.payload, EXIT_FAIL, "failed"
    except (UsageError, ws.DegenerateParameter, pen.VertexDegeneration, lat.UnknownName) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, RuntimeError, AssertionError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    fmt, meta = getattr(args, "format", "json"), getattr(args, "meta", False)
    print(render(args.command, data, fmt, meta, status))
    return code


if __name__ == "__main__":
    sys.exit(main())
