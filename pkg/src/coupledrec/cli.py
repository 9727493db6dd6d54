"""Command-line front end.

Usage:
    coupledrec system --tiling 3                 # emit a system document
    coupledrec system --random 7 --order 4       # random Gaussian-rational system
    coupledrec decouple system.json --check      # scalar recurrence coefficients
    coupledrec verify --tiling 3 --horizon 50    # run all cross-checks
    coupledrec gen --tiling 2 -n 10 --which a    # sequence terms
    coupledrec tiling 3 12 --enumerate           # counts with brute-force column
    coupledrec triangle 7                        # coefficient triangle rows

Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Any, Sequence, TextIO

from .algebra import format_scalar
from .companion import build_companion, char_poly_oracle
from .decouple import (
    CoefficientVector,
    CoupledSystem,
    char_poly,
    coefficients_closed,
    coefficients_recursive,
    trim_trailing_zeros,
)
from .document import SystemDocument, dumps_document, loads_document
from .sampling import RandomSystemConfig, random_system
from .sequence import bootstrap_initials, generate_coupled, generate_decoupled, verify_recurrence
from .tiling import coefficient_triangle, enumerate_tilings, split_counts, tiling_counts, tiling_system

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("plain", "csv", "json")


class UsageError(Exception):
    pass


def _emit_table(headers: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str, out: TextIO) -> None:
    cells = [[str(x) for x in row] for row in rows]
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(headers)
        w.writerows(cells)
    elif fmt == "json":
        json.dump([dict(zip(headers, row)) for row in cells], out, indent=2)
        out.write("\n")
    elif fmt == "bfile":
        for row in cells:
            out.write(" ".join(row) + "\n")
    else:
        widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(headers)]
        out.write("  ".join(h.rjust(wd) for h, wd in zip(headers, widths)).rstrip() + "\n")
        for row in cells:
            out.write("  ".join(c.rjust(wd) for c, wd in zip(row, widths)).rstrip() + "\n")


def _load(args) -> SystemDocument:
    if args.tiling is not None:
        if args.input is not None:
            raise UsageError("give either an input document or --tiling, not both")
        try:
            return SystemDocument(tiling_system(args.tiling))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        return loads_document(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _strs(xs) -> list[str]:
    return [format_scalar(x) for x in xs]


def cmd_system(args, out: TextIO) -> int:
    if (args.tiling is None) == (args.random is None):
        raise UsageError("choose exactly one of --tiling K or --random SEED")
    if args.tiling is not None:
        try:
            system = tiling_system(args.tiling)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        cfg = RandomSystemConfig(bound=args.bound, complex_entries=not args.real)
        order = args.order
        if order is not None and order < 1:
            raise UsageError("order must be at least 1")
        system = random_system(random.Random(args.random), cfg, order)
    claimed = coefficients_recursive(system.matrices) if args.with_coefficients else None
    out.write(dumps_document(system, claimed) + "\n")
    return EXIT_OK


def cmd_decouple(args, out: TextIO) -> int:
    doc = _load(args)
    system = doc.system
    rec = coefficients_recursive(system.matrices)
    status = EXIT_OK
    result: dict[str, Any] = {"order": system.order, "coefficients": _strs(rec)}
    if args.check:
        closed = coefficients_closed(system.matrices)
        result["closed_form"] = _strs(closed)
        result["closed_form_match"] = closed == rec
        if closed != rec:
            status = EXIT_CHECK_FAILED
            print("error: recursive and closed-form coefficients differ", file=sys.stderr)
    poly = char_poly(rec)
    result["char_poly"] = _strs(poly.coeffs)
    result["char_poly_text"] = str(poly)
    if args.trim:
        result["trimmed"] = _strs(trim_trailing_zeros(rec))

    if args.format == "json":
        json.dump(result, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        rows = [(i, c) for i, c in enumerate(result["coefficients"], start=1)]
        headers = ["index", "coefficient"]
        if args.check:
            headers.append("closed_form")
            rows = [r + (cf,) for r, cf in zip(rows, result["closed_form"])]
        _emit_table(headers, rows, "csv", out)
    else:
        out.write(f"order: {system.order}\n")
        out.write(f"coefficients: {' '.join(result['coefficients'])}\n")
        if args.check:
            verdict = "match" if result["closed_form_match"] else "MISMATCH"
            out.write(f"closed form: {' '.join(result['closed_form'])} ({verdict})\n")
        if args.trim:
            out.write(f"trimmed: {' '.join(result['trimmed'])}\n")
        out.write(f"characteristic polynomial: {result['char_poly_text']}\n")
    return status


def run_checks(system: CoupledSystem, horizon: int, claimed: CoefficientVector | None = None) -> list[dict]:
    """Cross-checks used by ``verify``: one dict per check with a ``passed`` flag."""
    rec = coefficients_recursive(system.matrices)
    closed = coefficients_closed(system.matrices)
    checks = [
        {
            "check": "recursive_vs_closed",
            "passed": rec == closed,
            "detail": "" if rec == closed else f"closed form gives {' '.join(_strs(closed))}",
        }
    ]
    oracle = char_poly_oracle(build_companion(system))
    poly = char_poly(rec)
    checks.append(
        {
            "check": "charpoly_vs_companion",
            "passed": oracle == poly,
            "detail": "" if oracle == poly else f"companion gives {oracle}, coefficients give {poly}",
        }
    )
    c = claimed if claimed is not None else rec
    if claimed is not None:
        checks.append(
            {
                "check": "claimed_coefficients",
                "passed": claimed == rec,
                "detail": "" if claimed == rec else f"expected {' '.join(_strs(rec))}",
            }
        )
    pair = generate_coupled(system, horizon)
    failures = []
    for name, seq in (("a", pair.a), ("b", pair.b), ("t", pair.t)):
        report = verify_recurrence(seq, c)
        if not report:
            failures.append(f"{name} fails at n={report.first_violation}")
    checks.append(
        {
            "check": "coupled_vs_decoupled",
            "passed": not failures,
            "detail": "; ".join(failures) if failures else f"n in [{2 * system.order}, {horizon}]",
        }
    )
    return checks


def cmd_verify(args, out: TextIO) -> int:
    doc = _load(args)
    system = doc.system
    if args.horizon < 2 * system.order:
        raise UsageError(f"horizon must be at least {2 * system.order} for order {system.order}")
    checks = run_checks(system, args.horizon, doc.claimed)
    ok = all(ch["passed"] for ch in checks)
    if args.format == "json":
        json.dump({"passed": ok, "checks": checks}, out, indent=2)
        out.write("\n")
    else:
        rows = [(ch["check"], "pass" if ch["passed"] else "FAIL", ch["detail"]) for ch in checks]
        _emit_table(["check", "result", "detail"], rows, args.format, out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_gen(args, out: TextIO) -> int:
    doc = _load(args)
    system = doc.system
    n = args.n
    if n < 0:
        raise UsageError("n must be non-negative")
    if args.method == "decoupled":
        c = doc.claimed if doc.claimed is not None else coefficients_recursive(system.matrices)
        a0, b0, t0 = bootstrap_initials(system)
        init = {"a": a0, "b": b0, "t": t0}[args.which]
        terms = generate_decoupled(c, init, max(n, 2 * system.order - 1))[: n + 1]
    else:
        pair = generate_coupled(system, max(n, system.order - 1))
        terms = pair.component(args.which)[: n + 1]
    values = _strs(terms)
    if args.format == "json":
        json.dump({"component": args.which, "method": args.method, "terms": values}, out, indent=2)
        out.write("\n")
    else:
        _emit_table(["n", args.which], list(enumerate(values)), args.format, out)
    return EXIT_OK


def cmd_tiling(args, out: TextIO) -> int:
    if args.k < 1:
        raise UsageError(f"maximal piece size must be at least 1, got {args.k}")
    if args.n < 0:
        raise UsageError("n must be non-negative")
    counts = tiling_counts(args.k, args.n)
    headers = ["n", "a", "b", "t"]
    rows = [list(r) for r in counts.rows()]
    status = EXIT_OK
    if args.enumerate:
        headers += ["enum_a", "enum_b", "enum_t", "match"]
        for row in rows:
            ea, eb = split_counts(enumerate_tilings(args.k, row[0]))
            match = (ea, eb) == (row[1], row[2])
            if not match:
                status = EXIT_CHECK_FAILED
            row += [ea, eb, ea + eb, "yes" if match else "NO"]
    _emit_table(headers, rows, args.format, out)
    return status


def cmd_triangle(args, out: TextIO) -> int:
    if args.max_k < 1:
        raise UsageError("max_k must be at least 1")
    tri = coefficient_triangle(args.max_k)
    if args.format == "json":
        json.dump([{"k": k, "coefficients": _strs(row)} for k, row in enumerate(tri, start=1)], out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["k"] + [f"c{i}" for i in range(1, 2 * args.max_k + 1)])
        for k, row in enumerate(tri, start=1):
            w.writerow([k] + _strs(row))
    else:
        cells = [_strs(row) for row in tri]
        width = max(len(x) for row in cells for x in row) + 1
        full = 2 * args.max_k * width
        for row in cells:
            line = "".join(x.rjust(width) for x in row)
            out.write(line.center(full).rstrip() + "\n")
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="system document (JSON); '-' or omitted reads stdin")
    p.add_argument("--tiling", type=int, metavar="K", help="use the built-in tiling system for pieces up to K")


def _add_format(p: argparse.ArgumentParser, extra: Sequence[str] = ()) -> None:
    p.add_argument("--format", choices=FORMATS + tuple(extra), default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coupledrec", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("system", help="emit a system document")
    p.add_argument("--tiling", type=int, metavar="K")
    p.add_argument("--random", type=int, metavar="SEED")
    p.add_argument("--order", type=int, help="order of the random system (default: random in 1..6)")
    p.add_argument("--bound", type=int, default=9, help="numerator/denominator bound for random entries")
    p.add_argument("--real", action="store_true", help="random entries with zero imaginary part")
    p.add_argument("--with-coefficients", action="store_true", help="include the computed coefficients")
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("decouple", help="scalar recurrence coefficients and characteristic polynomial")
    _add_input(p)
    p.add_argument("--check", action="store_true", help="also compute the closed form and compare")
    p.add_argument("--trim", action="store_true", help="also print the vector without trailing zeros")
    _add_format(p)
    p.set_defaults(func=cmd_decouple)

    p = sub.add_parser("verify", help="run the cross-checks")
    _add_input(p)
    p.add_argument("--horizon", type=int, default=200, help="last index checked (default 200)")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate sequence terms")
    _add_input(p)
    p.add_argument("-n", type=int, required=True, help="last index generated")
    p.add_argument("--which", choices=("a", "b", "t"), default="t")
    p.add_argument("--method", choices=("coupled", "decoupled"), default="coupled")
    _add_format(p, ("bfile",))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tiling", help="tiling counts a, b, t for n = 0..N")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--enumerate", action="store_true", help="add brute-force counts; exit 1 on mismatch")
    _add_format(p)
    p.set_defaults(func=cmd_tiling)

    p = sub.add_parser("triangle", help="coefficient triangle rows k = 1..MAX_K")
    p.add_argument("max_k", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_triangle)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = out if out is not None else sys.stdout
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


def entry() -> None:
    sys.exit(main())
