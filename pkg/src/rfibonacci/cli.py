"""Command-line entry point: ``rfib <command> [options]``.

Exit status is 0 on success, 1 when a verified identity fails, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import exactnum as ex
from .fibpoly import fib_matrix, fib_multinomial, fib_recursive
from .identities import (
    Report,
    bell_complete_ordinary,
    bell_partial_exponential,
    bell_partial_ordinary,
    cassini_check,
)
from .numericbinet import (
    NonConvergence,
    DegenerateSpectrum,
    binet_eval,
    binet_sweep,
    char_roots,
    generic_binet_eval,
    homogeneous_sum_eval,
)
from .series import fib_genfun_coefficients, fubini_restricted
from .verify import CHECKS, run_all

MAX_R = 8
MAX_SYMBOLIC_N = 500
MAX_ENUMERATION_N = 10

BUILDERS = {"recursive": fib_recursive, "matrix": fib_matrix, "multinomial": fib_multinomial}


class UsageError(Exception):
    pass


def _point(text, r, exact=True):
    if text is None:
        raise UsageError("--at is required")
    try:
        vals = [Fraction(v.strip()) for v in text.split(",")]
    except ValueError as err:
        raise UsageError(f"bad --at value {text!r}: {err}") from None
    if len(vals) != r:
        raise UsageError(f"--at needs {r} values, got {len(vals)}")
    return vals if exact else [float(v) for v in vals]


def _bound(name, value, lo, hi):
    if value is None:
        raise UsageError(f"--{name} is required")
    if not lo <= value <= hi:
        raise UsageError(f"--{name} must be in [{lo}, {hi}], got {value}")
    return value


def _emit_poly(p, fmt, out):
    if fmt == "json":
        out.write(json.dumps(p.to_json()) + "\n")
    else:
        out.write(str(p) + "\n")


def _write_csv(header, rows, out):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


def cmd_fib(a, out):
    r = _bound("r", a.r, 1, MAX_R)
    n = _bound("n", a.n, 0, MAX_SYMBOLIC_N)
    if a.method == "matrix" and n < r - 1:
        raise UsageError("the matrix method needs n >= r-1")
    _emit_poly(BUILDERS[a.method](r, n), a.format, out)
    return 0


def cmd_fib_eval(a, out):
    r = _bound("r", a.r, 1, MAX_R)
    n = _bound("n", a.n, 0, MAX_SYMBOLIC_N)
    value = fib_recursive(r, n).evaluate(_point(a.at, r))
    if a.format == "json":
        out.write(json.dumps({"r": r, "n": n, "at": a.at, "value": str(value)}) + "\n")
    else:
        out.write(f"{value}\n")
    return 0


def cmd_table(a, out):
    r = _bound("r", a.r, 1, MAX_R)
    n_max = _bound("n-max", a.n_max, 0, MAX_SYMBOLIC_N)
    at = _point(a.at, r) if a.at else None
    rows = []
    for n in range(n_max + 1):
        p = fib_recursive(r, n)
        rows.append((n, p.evaluate(at) if at else p))
    if a.format == "json":
        out.write(json.dumps([
            {"n": n, "value": str(v) if at else v.to_json()} for n, v in rows
        ]) + "\n")
    elif a.format == "csv":
        _write_csv(["n", "value"], [(n, str(v)) for n, v in rows], out)
    else:
        for n, v in rows:
            out.write(f"F_{n} = {v}\n")
    return 0


def cmd_series(a, out):
    r = _bound("r", a.r, 1, MAX_R)
    order = _bound("order", a.order, 0, MAX_SYMBOLIC_N)
    coeffs = fib_genfun_coefficients(r, order)
    if a.format == "json":
        out.write(json.dumps([c.to_json() for c in coeffs]) + "\n")
    elif a.format == "csv":
        _write_csv(["power", "coefficient"], [(k, str(c)) for k, c in enumerate(coeffs)], out)
    else:
        for k, c in enumerate(coeffs):
            out.write(f"z^{k}: {c}\n")
    return 0


def cmd_bell(a, out):
    n = _bound("n", a.n, 1, MAX_ENUMERATION_N * 3)
    if a.k is None:
        if a.kind != "ordinary":
            raise UsageError("the complete form is only available for --kind ordinary")
        p = bell_complete_ordinary(n)
    else:
        k = _bound("k", a.k, 1, n)
        p = (bell_partial_ordinary if a.kind == "ordinary" else bell_partial_exponential)(n, k)
    _emit_poly(p, a.format, out)
    return 0


def cmd_fubini(a, out):
    n = _bound("n", a.n, 0, MAX_SYMBOLIC_N)
    value = ex.fubini(n) if a.max_block is None else fubini_restricted(n, _bound("max-block", a.max_block, 1, MAX_SYMBOLIC_N))
    out.write(f"{value}\n")
    return 0


def cmd_stirling(a, out):
    n = _bound("n", a.n, 0, MAX_SYMBOLIC_N)
    if a.k is None:
        for k in range(n + 1):
            out.write(f"S({n},{k}) = {ex.stirling2(n, k)}\n")
    else:
        out.write(f"{ex.stirling2(n, _bound('k', a.k, 0, MAX_SYMBOLIC_N))}\n")
    return 0


def cmd_binet(a, out):
    header = ["r", "n", "point", "method", "value", "reference", "relative_error"]
    if a.at is None:
        rows: list = []
        binet_sweep(seed=a.seed, points=100, max_r=5, max_n=30, rows=rows)
    else:
        r = _bound("r", a.r, 1, MAX_R)
        n = _bound("n", a.n, 0, MAX_SYMBOLIC_N)
        exact_point = _point(a.at, r)
        point = [float(v) for v in exact_point]
        reference = float(fib_recursive(r, n).evaluate(exact_point))
        roots = char_roots(r, point)
        values = [("binet", binet_eval(r, n, point, roots))]
        if n >= r - 1:
            values.append(("homogeneous", homogeneous_sum_eval(r, n, roots, point=point)))
        seeds = [0.0] * (r - 1) + [1.0]
        values.append(("generic", generic_binet_eval(r, n, point, seeds, roots)))
        label = ";".join(str(v) for v in exact_point)
        rows = [(r, n, label, m, v, reference, abs(v - reference) / (1 + abs(reference))) for m, v in values]
    rows = [(r, n, p, m, repr(v), repr(ref), f"{e:.3e}") for r, n, p, m, v, ref, e in rows]
    _write_csv(header, rows, out)
    return 0


def cmd_cassini(a, out):
    r = _bound("r", a.r, 1, MAX_R)
    n = _bound("n", a.n, 2 * r - 2, MAX_SYMBOLIC_N)
    holds, residual = cassini_check(r, n)
    rep = Report("cassini", {"r": r, "n": n}, holds, residual)
    if a.format == "json":
        out.write(json.dumps(rep.to_json()) + "\n")
    else:
        out.write(f"cassini r={r} n={n}: {'holds' if holds else 'FAILS, residual ' + str(residual)}\n")
    return 0 if holds else 1


def cmd_verify(a, out):
    if a.target == "all":
        names = None
    elif a.target in CHECKS:
        names = [a.target]
    else:
        raise UsageError(f"unknown identity {a.target!r}; choose 'all' or one of {', '.join(CHECKS)}")
    max_r = _bound("max-r", a.max_r, 1, MAX_R)
    max_n = _bound("max-n", a.max_n, 0, MAX_SYMBOLIC_N)
    reports = run_all(max_r, max_n, a.seed, names, workers=a.workers)
    if a.format == "json":
        out.write(json.dumps([rep.to_json() for rep in reports], indent=1) + "\n")
    else:
        for rep in reports:
            params = " ".join(f"{k}={v}" for k, v in rep.params.items())
            out.write(f"{'PASS' if rep.holds else 'FAIL'} {rep.identity} {params}\n")
    return 0 if all(rep.holds for rep in reports) else 1


COMMANDS = {
    "fib": cmd_fib,
    "fib-eval": cmd_fib_eval,
    "table": cmd_table,
    "series": cmd_series,
    "bell": cmd_bell,
    "fubini": cmd_fubini,
    "stirling": cmd_stirling,
    "binet": cmd_binet,
    "cassini": cmd_cassini,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rfib", description="r-Fibonacci polynomials and their identities")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, fmt=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=fmt, default=fmt[0])
        return p

    p = add("fib", "print F_n in r variables")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=sorted(BUILDERS), default="recursive")

    p = add("fib-eval", "evaluate F_n exactly at a rational point")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--at")

    p = add("table", "F_0 .. F_{n-max}, symbolic or evaluated", ("text", "json", "csv"))
    p.add_argument("--r", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--at")

    p = add("series", "generating-function coefficients", ("text", "json", "csv"))
    p.add_argument("--r", type=int)
    p.add_argument("--order", type=int)

    p = add("bell", "ordinary/exponential Bell polynomials")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=("ordinary", "exponential"), default="ordinary")

    p = add("fubini", "Fubini numbers, optionally with bounded block size", ("text",))
    p.add_argument("--n", type=int)
    p.add_argument("--max-block", type=int)

    p = add("stirling", "Stirling numbers of the second kind", ("text",))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)

    p = add("binet", "floating-point Binet forms vs exact values (CSV)", ("csv",))
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--at")
    p.add_argument("--seed", type=int, default=7)

    p = add("cassini", "check the Cassini determinant at (r, n)")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)

    p = add("verify", "run identity checks", ("json", "text"))
    p.add_argument("target", nargs="?", default="all")
    p.add_argument("--max-r", type=int, default=4)
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        err.write(f"rfib: error: {e}\n")
        return 2
    except (DegenerateSpectrum, NonConvergence) as e:
        err.write(f"rfib: {type(e).__name__}: {e}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
