"""Command-line front end.

Subcommands read one request per line (JSON) from stdin, or a single request
from flags, and write one record per request to stdout.  Exit codes: 0 ok,
1 input error, 2 verification failure.
"""

import argparse
import csv
import io
import json
import math
import sys

from .elements import element, integrate
from .equiv_poly import solve
from .line_segment import BoundaryMode
from .verify import DEFAULT_ELEMENTS, parse_element, run_checks

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2


class InputError(ValueError):
    """Malformed request; the message names the offending field."""


# -- output ------------------------------------------------------------------


def format_float(x):
    """17 significant digits: round-trips every double."""
    if math.isnan(x) or math.isinf(x):
        return json.dumps(x)
    text = format(x, ".17g")
    return text if any(ch in text for ch in ".e") else text + ".0"


def to_json(obj):
    """Deterministic JSON with floats written by :func:`format_float`."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if hasattr(obj, "tolist"):
        return to_json(obj.tolist())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(v):
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_cell(x) for x in v)
    if v is None:
        return ""
    return str(v)


class Emitter:
    def __init__(self, fmt, columns, out):
        self.fmt = fmt
        self.columns = columns
        self.out = out
        self._header = False

    def emit(self, record):
        if self.fmt == "json":
            self.out.write(to_json(record) + "\n")
            return
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if not self._header:
            writer.writerow(self.columns)
            self._header = True
        writer.writerow([_csv_cell(record.get(c)) for c in self.columns])
        self.out.write(buf.getvalue())


# -- request parsing -----------------------------------------------------------


def _number_list(value, field, cast):
    if isinstance(value, str):
        value = [v for v in value.replace(",", " ").split() if v]
    if not isinstance(value, (list, tuple)) or not value:
        raise InputError(f"field '{field}' must be a non-empty list")
    try:
        out = [cast(v) for v in value]
    except (TypeError, ValueError):
        raise InputError(f"field '{field}' has a non-numeric entry: {value!r}") from None
    if cast is int and any(isinstance(v, float) and not float(v).is_integer() for v in value):
        raise InputError(f"field '{field}' must hold integers: {value!r}")
    if cast is float and not all(math.isfinite(v) for v in out):
        raise InputError(f"field '{field}' must be finite: {value!r}")
    return out


def _require(req, field):
    if field not in req or req[field] is None:
        raise InputError(f"missing field '{field}'")
    return req[field]


def _parse_common(req):
    name = _require(req, "element")
    try:
        elem = parse_element(name) if req.get("dim") is None else element(name, req["dim"])
    except (ValueError, TypeError) as exc:
        raise InputError(f"field 'element': {exc}") from None
    normal = _number_list(_require(req, "normal"), "normal", float)
    if len(normal) != elem.dim:
        raise InputError(f"field 'normal' needs {elem.dim} entries for {elem.name}, got {len(normal)}")
    try:
        d = float(_require(req, "d"))
    except (TypeError, ValueError):
        raise InputError(f"field 'd' must be a number: {req.get('d')!r}") from None
    if not math.isfinite(d):
        raise InputError("field 'd' must be finite")
    s = req.get("s", 0)
    if s not in (0, -1) or isinstance(s, bool):
        raise InputError(f"field 's' must be 0 or -1, got {s!r}")
    try:
        mode = BoundaryMode.parse(req.get("boundary_mode", "half"))
    except ValueError as exc:
        raise InputError(f"field 'boundary_mode': {exc}") from None
    return elem, normal, d, int(s), mode


def _echo(elem, normal, d, s, mode):
    out = {"element": elem.kind}
    if elem.kind == "hypercube":
        out["dim"] = elem.dim
    out.update(normal=normal, d=d, s=s, boundary_mode=mode.value)
    return out


def handle_integrate(req):
    elem, normal, d, s, mode = _parse_common(req)
    powers = _number_list(_require(req, "powers"), "powers", int)
    if len(powers) != elem.dim:
        raise InputError(f"field 'powers' needs {elem.dim} entries for {elem.name}, got {len(powers)}")
    try:
        value, variant = integrate(elem, normal, d, powers, s, mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rec = _echo(elem, normal, d, s, mode)
    rec["powers"] = powers
    rec["value"] = value
    if variant is not None:
        rec["variant"] = variant.value
    if req.get("normalize") and s == -1:
        norm = math.sqrt(sum(a * a for a in normal))
        unit = [a / norm for a in normal]
        nval, _ = integrate(elem, unit, d / norm, powers, s, mode)
        rec["normalized"] = {"normal": unit, "d": d / norm, "value": nval}
    return rec


def handle_equiv_poly(req):
    elem, normal, d, s, mode = _parse_common(req)
    degree = _require(req, "degree")
    if isinstance(degree, bool) or not isinstance(degree, int):
        try:
            degree = int(str(degree))
        except ValueError:
            raise InputError(f"field 'degree' must be an integer, got {degree!r}") from None
    try:
        system = solve(elem, degree, normal, d, s, mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rec = _echo(elem, normal, d, s, mode)
    rec["degree"] = degree
    if system.basis.variant is not None:
        rec["variant"] = system.basis.variant.value
    rec.update(basis=[list(e) for e in system.basis.entries], f_o=system.f_o, c=system.c,
               residual=system.residual)
    return rec


INTEGRATE_COLUMNS = ["element", "dim", "normal", "d", "powers", "s", "boundary_mode", "value", "variant",
                     "normalized_value", "error"]
EQUIV_COLUMNS = ["element", "dim", "normal", "d", "s", "boundary_mode", "degree", "variant", "basis", "f_o", "c",
                 "residual", "error"]


def _flatten_csv(rec):
    rec = dict(rec)
    if "normalized" in rec:
        rec["normalized_value"] = rec.pop("normalized")["value"]
    if "basis" in rec:
        rec["basis"] = [";".join(str(p) for p in e) for e in rec["basis"]]
    return rec


def _requests_from_args(args, fields):
    if args.element is None:
        return None
    req = {f: getattr(args, f) for f in fields if getattr(args, f, None) is not None}
    req["boundary_mode"] = args.boundary_mode
    return req


def _run_batch(args, handler, columns, fields, stdin, stdout, stderr):
    emitter = Emitter(args.format, columns, stdout)
    single = _requests_from_args(args, fields)
    lines = [(1, single)] if single is not None else enumerate(stdin, start=1)
    status = EXIT_OK
    for lineno, item in lines:
        try:
            if isinstance(item, str):
                if not item.strip():
                    continue
                try:
                    item = json.loads(item)
                except json.JSONDecodeError as exc:
                    raise InputError(f"invalid JSON: {exc.msg}") from None
                if not isinstance(item, dict):
                    raise InputError("request must be a JSON object")
            rec = handler(item)
        except InputError as exc:
            stderr.write(f"cutmoments: request {lineno}: {exc}\n")
            rec = {"error": str(exc), "request": lineno}
            status = EXIT_INPUT
        emitter.emit(_flatten_csv(rec) if args.format == "csv" else rec)
    return status


def cmd_verify(args, stdout, stderr):
    if args.trials < 0:
        stderr.write("cutmoments: --trials must be >= 0\n")
        return EXIT_INPUT
    names = DEFAULT_ELEMENTS if args.elements == "all" else [e for e in args.elements.split(",") if e]
    try:
        for name in names:
            parse_element(name)
        results = run_checks(args.seed, args.trials, names, args.max_degree, args.inject_fault)
    except ValueError as exc:
        stderr.write(f"cutmoments: {exc}\n")
        return EXIT_INPUT
    columns = ["check", "element", "cases", "failures", "worst_error", "tolerance"]
    emitter = Emitter(args.format, columns + ["status", "worst_case"], stdout)
    worst = None
    for r in results:
        emitter.emit({"check": r.check, "element": r.element, "cases": r.cases, "failures": r.failures,
                      "worst_error": r.worst_error, "tolerance": r.tolerance})
        if r.worst_case is not None and (worst is None or r.worst_case["_excess"] > worst[1]["_excess"]):
            worst = (r, r.worst_case)
    failed = any(not r.passed for r in results)
    summary = {"check": "summary", "status": "fail" if failed else "pass",
               "cases": sum(r.cases for r in results), "failures": sum(r.failures for r in results)}
    if failed:
        case = {k: v for k, v in worst[1].items() if k != "_excess"}
        summary["worst_case"] = {"check": worst[0].check, "error": worst[0].worst_error, "request": case}
        stderr.write(f"cutmoments: verification failed; worst case ({worst[0].check}): {to_json(case)}\n")
    if args.format == "csv" and "worst_case" in summary:
        summary["worst_case"] = to_json(summary["worst_case"]["request"])
    emitter.emit(summary)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="cutmoments", description="Exact moments of cut reference elements.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--element", help="segment, square, cube, hypercube, triangle, tetrahedron or prism; "
                                         "omit to read JSON-lines requests from stdin")
        p.add_argument("--dim", type=int, help="hypercube dimension")
        p.add_argument("--normal", help="comma-separated cut coefficients")
        p.add_argument("--d", type=float, help="cut offset")
        p.add_argument("--s", type=int, default=0, choices=(0, -1), help="0 subdomain, -1 interface")
        p.add_argument("--boundary-mode", default="half", choices=("half", "full"))
        p.add_argument("--format", default="json", choices=("json", "csv"))

    p = sub.add_parser("integrate", help="moment of one basis function")
    common(p)
    p.add_argument("--powers", help="comma-separated exponents")
    p.add_argument("--normalize", action="store_true", help="also report the value for the unit normal (s = -1)")

    p = sub.add_parser("equiv-poly", help="equivalent-polynomial coefficients")
    common(p)
    p.add_argument("--degree", type=int, help="basis degree")

    p = sub.add_parser("verify", help="randomized kernel-vs-oracle report")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100, help="cuts per element")
    p.add_argument("--elements", default="all", help="comma-separated list or 'all'")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--inject-fault", action="store_true", help="perturb kernel values (negative control)")
    p.add_argument("--format", default="json", choices=("json", "csv"))
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.command == "integrate":
        fields = ("element", "dim", "normal", "d", "powers", "s", "normalize")
        return _run_batch(args, handle_integrate, INTEGRATE_COLUMNS, fields, stdin, stdout, stderr)
    if args.command == "equiv-poly":
        fields = ("element", "dim", "normal", "d", "degree", "s")
        return _run_batch(args, handle_equiv_poly, EQUIV_COLUMNS, fields, stdin, stdout, stderr)
    return cmd_verify(args, stdout, stderr)
