"""Command-line front end.

    degbern table  --family poly-bernoulli --k 2 --lambda 1/2 --n-max 4
    degbern verify --order 12 --k-range -2..4 --lambda symbolic
    degbern limit  --family carlitz --n-max 8

Exit status: 0 success, 1 a check or limit comparison failed, 2 usage error.
The default truncation order comes from ``DEGBERN_ORDER`` (16 if unset).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import identities as ids
from . import sequences as seq
from .degenerate import deg_polylog_series
from .scalars import LAMBDA, parse_scalar, render_scalar

FAMILIES = ("bernoulli", "carlitz", "poly-bernoulli", "stirling1", "stirling2",
            "deg-stirling1", "deg-stirling2", "deg-polylog-coeffs")

PATHS = {
    "bernoulli": ("gf", "recurrence"),
    "carlitz": ("gf", "recurrence"),
    "poly-bernoulli": ("gf", "explicit", "integral"),
    "stirling1": ("gf", "expansion"),
    "stirling2": ("gf", "recurrence"),
    "deg-stirling1": ("gf", "recurrence", "inversion"),
    "deg-stirling2": ("gf", "sum", "inversion"),
    "deg-polylog-coeffs": ("gf",),
}

CLASSICAL = {"bernoulli", "stirling1", "stirling2"}

# options whose values may start with "-" (e.g. "--k-range -2..4")
_VALUE_OPTIONS = {"--k-range", "--lambda", "--k", "--x"}

DEFAULT_ORDER = 16


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get("DEGBERN_ORDER")
    if not raw:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"DEGBERN_ORDER must be an integer, got {raw!r}")
    if value < 0:
        raise UsageError("DEGBERN_ORDER must be nonnegative")
    return value


def parse_lambda(text: str):
    text = text.strip()
    if text == "symbolic":
        return LAMBDA
    try:
        value = parse_scalar(text)
    except ValueError as exc:
        raise UsageError(f"bad lambda {text!r}: {exc}")
    if not isinstance(value, Fraction):
        raise UsageError(f"lambda must be a rational literal or 'symbolic', got {text!r}")
    return value


def parse_rational(text: str) -> Fraction:
    try:
        value = parse_scalar(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not isinstance(value, Fraction):
        raise UsageError(f"expected a rational literal, got {text!r}")
    return value


def parse_k_range(text: str):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return (int(text),)
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad k range {text!r}; expected A..B")
    if lo > hi:
        raise UsageError(f"empty k range {text!r}")
    return tuple(range(lo, hi + 1))


def _join_values(argv):
    out = []
    it = iter(argv)
    for arg in it:
        if arg in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(arg if nxt is None else f"{arg}={nxt}")
        else:
            out.append(arg)
    return out


# -- output --------------------------------------------------------------------


def _emit(rows, columns, fmt, output):
    if fmt == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: "" if row.get(c) is None else row.get(c) for c in columns})
        text = buf.getvalue()
    if output and output != "-":
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- table -----------------------------------------------------------------------


def table_values(family, n_max, k=1, lam=LAMBDA, x=Fraction(0), path="gf"):
    """:class:`~degbern.sequences.SequenceValue` rows for one family, in index order."""
    if path not in PATHS[family]:
        raise UsageError(f"family {family} has no path {path!r} "
                         f"(choose from {', '.join(PATHS[family])})")
    lam_out = None if family in CLASSICAL else lam
    out = []

    def add(n, kk, value):
        out.append(seq.SequenceValue(family, n, kk, lam_out, value, path, x))

    if family == "bernoulli":
        for n in range(n_max + 1):
            add(n, None, seq.bernoulli_poly(n, x, path) if x else seq.bernoulli_table(n_max, path)[n])
    elif family == "carlitz":
        for n, v in enumerate(seq.carlitz_table(lam, n_max, x, path)):
            add(n, None, v)
    elif family == "poly-bernoulli":
        if x:
            if path == "integral":
                raise UsageError("the integral path only produces numbers (x = 0)")
            route = "sum" if path == "explicit" else "gf"
            values = seq.poly_bernoulli_poly_table(k, lam, x, n_max, route)
        else:
            if path == "integral" and k < 2:
                raise UsageError("the integral path needs k >= 2")
            values = seq.poly_bernoulli_table(k, lam, n_max, path)
        for n, v in enumerate(values):
            add(n, k, v)
    elif family in ("stirling1", "stirling2", "deg-stirling1", "deg-stirling2"):
        if family == "stirling1":
            t = seq.stirling1_table(n_max, path)
        elif family == "stirling2":
            t = seq.stirling2_table(n_max, path)
        elif family == "deg-stirling1":
            t = seq.deg_stirling1_table(lam, n_max, path)
        else:
            t = seq.deg_stirling2_table(lam, n_max, path)
        for n in range(n_max + 1):
            for j in range(n + 1):
                add(n, j, t[n][j])
    elif family == "deg-polylog-coeffs":
        for n, v in enumerate(deg_polylog_series(k, lam, n_max)):
            add(n, k, v)
    return out


def _lambda_text(lam):
    if lam is None:
        return None
    return ids.lambda_label(lam)


def value_rows(values, with_x=False):
    rows = []
    for v in values:
        row = {"family": v.family, "n": v.n, "k": v.k, "lambda": _lambda_text(v.lam),
               "value": render_scalar(v.value), "path": v.path}
        if with_x:
            row["x"] = render_scalar(v.x)
        rows.append(row)
    return rows


TABLE_COLUMNS = ["family", "n", "k", "lambda", "value", "path"]


def cmd_table(args) -> int:
    order = args.order if args.order is not None else default_order()
    n_max = order if args.n_max is None else args.n_max
    if n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if n_max > order:
        raise UsageError(f"--n-max {n_max} exceeds the truncation order {order}")
    lam = parse_lambda(args.lam)
    x = parse_rational(args.x) if args.x is not None else Fraction(0)
    values = table_values(args.family, n_max, args.k, lam, x, args.path)
    with_x = args.x is not None
    _emit(value_rows(values, with_x), TABLE_COLUMNS + (["x"] if with_x else []),
          args.format, args.output)
    return 0


# -- verify ----------------------------------------------------------------------


def parse_fault(text):
    family, _, index = text.partition(":")
    if family not in ids.FAULT_FAMILIES:
        raise UsageError(f"--inject-fault family must be one of {', '.join(ids.FAULT_FAMILIES)}")
    if index:
        try:
            idx = tuple(int(v) for v in index.split(","))
        except ValueError:
            raise UsageError(f"bad fault index {index!r}")
    else:
        idx = (2, 1) if "stirling" in family else (1,)
    return ids.CorruptedTables(family, idx)


def cmd_verify(args) -> int:
    order = args.order if args.order is not None else default_order()
    if order < 0:
        raise UsageError("--order must be nonnegative")
    lambdas, symbolic = [], False
    for item in (s for s in args.lam.split(",") if s.strip()):
        value = parse_lambda(item)
        if value is LAMBDA:
            symbolic = True
        else:
            lambdas.append(value)
    tables = parse_fault(args.inject_fault) if args.inject_fault else ids.DEFAULT_TABLES
    config = ids.SuiteConfig(order=order, k_range=parse_k_range(args.k_range),
                             lambdas=tuple(lambdas), symbolic=symbolic,
                             composition_budget=args.budget, tables=tables)
    report = ids.run_suite(config)
    if args.format == "json":
        text = ids.report_to_json(report) + "\n"
        if args.output and args.output != "-":
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        rows = [{"name": c.name, "params": json.dumps(c.params, sort_keys=True),
                 "verdict": c.verdict,
                 "counterexample": json.dumps(c.counterexample) if c.counterexample else None,
                 "notes": "; ".join(c.notes) or None}
                for c in report]
        _emit(rows, ["name", "params", "verdict", "counterexample", "notes"], "csv", args.output)
    failed = [c for c in report if not c.passed]
    if not report:
        print("nothing run", file=sys.stderr)
        return 0
    print(f"{len(report)} checks, {len(failed)} failed", file=sys.stderr)
    for c in failed:
        ce = c.counterexample
        print(f"FAIL {c.name} {json.dumps(c.params, sort_keys=True)} at {ce['index']}: "
              f"{ce['lhs']} != {ce['rhs']}", file=sys.stderr)
    return 1 if failed else 0


# -- limit -----------------------------------------------------------------------


LIMIT_CLI = {
    "carlitz": "carlitz",
    "deg-stirling1": "deg-stirling1",
    "deg-stirling2": "deg-stirling2",
    "deg-log": "deg-log",
    "deg-polylog-coeffs": "deg-polylog",
    "poly-bernoulli": "poly-bernoulli",
}


def cmd_limit(args) -> int:
    order = args.order if args.order is not None else default_order()
    n_max = order if args.n_max is None else args.n_max
    if n_max > order:
        raise UsageError(f"--n-max {n_max} exceeds the truncation order {order}")
    families = list(LIMIT_CLI) if args.family == "all" else [args.family]
    rows = []
    for fam in families:
        k = args.k if fam in ("poly-bernoulli", "deg-polylog-coeffs") else None
        for index, deg, classical in ids.limit_rows(LIMIT_CLI[fam], n_max,
                                                    args.k if k is not None else 1):
            rows.append({"family": fam, "n": index["n"], "k": index.get("k", k),
                         "degenerate_at_0": render_scalar(deg),
                         "classical": render_scalar(classical),
                         "match": "yes" if deg == classical else "NO"})
    _emit(rows, ["family", "n", "k", "degenerate_at_0", "classical", "match"],
          args.format, args.output)
    bad = sum(r["match"] != "yes" for r in rows)
    if bad:
        print(f"{bad} limit mismatches", file=sys.stderr)
    return 1 if bad else 0


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degbern", description="Exact degenerate poly-Bernoulli tables and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default):
        p.add_argument("--order", type=int, default=None,
                       help="truncation order N (default: $DEGBERN_ORDER or 16)")
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
        p.add_argument("--output", default="-", help="output file (default: stdout)")

    t = sub.add_parser("table", help="emit an exact table of one family")
    t.add_argument("--family", required=True, choices=FAMILIES)
    t.add_argument("--k", type=int, default=1, help="polylogarithm order k")
    t.add_argument("--lambda", dest="lam", default="symbolic",
                   help="rational literal p/q or 'symbolic'")
    t.add_argument("--x", default=None, help="polynomial argument x (rational)")
    t.add_argument("--n-max", type=int, default=None)
    t.add_argument("--path", default="gf", help="computation route")
    common(t, "csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--k-range", default="-2..4")
    v.add_argument("--lambda", dest="lam", default="symbolic",
                   help="comma-separated rationals and/or 'symbolic'")
    v.add_argument("--budget", type=int, default=10 ** 5,
                   help="maximum weak compositions enumerated per index")
    v.add_argument("--inject-fault", default=None, metavar="FAMILY[:n[,k]]",
                   help="corrupt one table entry (testing aid)")
    common(v, "json")
    v.set_defaults(func=cmd_verify)

    lim = sub.add_parser("limit", help="compare lambda -> 0 values with classical ones")
    lim.add_argument("--family", default="all", choices=("all",) + tuple(LIMIT_CLI))
    lim.add_argument("--k", type=int, default=1)
    lim.add_argument("--n-max", type=int, default=None)
    common(lim, "csv")
    lim.set_defaults(func=cmd_limit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
