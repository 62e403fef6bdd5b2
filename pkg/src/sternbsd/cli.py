"""Command-line interface.

Deterministic, scriptable output with a stable exit-code contract:
0 on success, 1 when a verification check fails, 2 for usage or domain
errors.  Digit-string arguments use the display alphabet ('T' for -1);
negative integers are accepted where the mathematics allows them
(short-BSD and fixed-width commands) and rejected for hyperbinary ones.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .representations import (
    count_short_bsd_recurrence,
    enumerate_bsd_fixed,
    enumerate_hyperbinary,
    enumerate_short_bsd,
    parse_bsd,
    parse_hb,
)
from .bijections import hb_to_short_bsd, short_bsd_to_hb
from .series import lhs_finite, rhs_finite
from .stern import stern
from .verify import CHECK_NAMES, VerifyConfig, run_all

__all__ = ["main", "build_parser"]


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _print_csv(header: list[str], rows: list[list[object]]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(str(cell) for cell in row))


# --- stern ---------------------------------------------------------------

def _cmd_stern(args: argparse.Namespace) -> int:
    value = stern(args.n)
    if args.format == "json":
        print(json.dumps({"n": args.n, "value": value}))
    else:
        print(value)
    return 0


# --- enumerate -----------------------------------------------------------

def _enumerate(kind: str, n: int, i: int | None) -> list[str]:
    if kind == "short-bsd":
        if i is not None:
            raise ValueError("width argument applies to 'fixed' only")
        return [str(r) for r in enumerate_short_bsd(n)]
    if kind == "fixed":
        if i is None:
            raise ValueError("'fixed' requires a width argument")
        return [str(r) for r in enumerate_bsd_fixed(n, i)]
    if i is not None:
        raise ValueError("width argument applies to 'fixed' only")
    return [str(h) for h in enumerate_hyperbinary(n)]


def _cmd_enumerate(args: argparse.Namespace) -> int:
    listing = _enumerate(args.kind, args.n, args.i)
    if args.format == "json":
        print(json.dumps(listing))
    elif args.format == "csv":
        _print_csv(["representation"], [[s] for s in listing])
    else:
        for s in listing:
            print(s)
        print(f"count: {len(listing)}")
    return 0


# --- count ---------------------------------------------------------------

def _count_methods(kind: str, n: int, i: int | None) -> dict[str, int]:
    """The count of `kind` representations of n by every applicable method."""
    methods: dict[str, int] = {}
    if kind == "short-bsd":
        methods["closed-form"] = stern(abs(n))
        methods["recurrence"] = count_short_bsd_recurrence(n)
        methods["enumerate"] = len(enumerate_short_bsd(n))
    elif kind == "hyperbinary":
        if n < 0:
            raise ValueError("hyperbinary representations exist only for n >= 0")
        methods["closed-form"] = stern(n + 1)
        methods["recurrence"] = count_short_bsd_recurrence(n + 1)
        methods["enumerate"] = len(enumerate_hyperbinary(n))
    else:  # fixed
        if i is None:
            raise ValueError("'fixed' requires --i")
        if abs(n) > (1 << i) - 1:
            raise ValueError(f"{n} is not representable in {i} signed digits")
        methods["closed-form"] = stern((1 << i) - abs(n))
        methods["enumerate"] = len(enumerate_bsd_fixed(n, i))
    return methods


def _cmd_count(args: argparse.Namespace) -> int:
    methods = _count_methods(args.kind, args.n, args.i)
    if args.method == "all":
        values = set(methods.values())
        if len(values) > 1:
            detail = ", ".join(f"{name}={v}" for name, v in methods.items())
            print(f"count methods disagree: {detail}", file=sys.stderr)
            return 1
        count = values.pop()
        if args.format == "json":
            print(json.dumps({"count": count, "methods": methods}))
        else:
            print(count)
        return 0
    if args.method not in methods:
        raise ValueError(f"method {args.method!r} is not available for kind {args.kind!r}")
    count = methods[args.method]
    if args.format == "json":
        print(json.dumps({"count": count}))
    else:
        print(count)
    return 0


# --- map -----------------------------------------------------------------

def _cmd_map(args: argparse.Namespace) -> int:
    if args.direction == "hb-to-bsd":
        result = str(hb_to_short_bsd(parse_hb(args.digits)))
    else:
        result = str(short_bsd_to_hb(parse_bsd(args.digits)))
    if args.format == "json":
        print(json.dumps({"input": args.digits, "result": result}))
    else:
        print(result)
    return 0


# --- series --------------------------------------------------------------

def _cmd_series(args: argparse.Namespace) -> int:
    series = lhs_finite(args.m) if args.side == "lhs" else rhs_finite(args.m)
    terms = series.terms()
    if args.format == "json":
        print(json.dumps([[e, c] for e, c in terms]))
    elif args.format == "csv":
        _print_csv(["exponent", "coefficient"], [[e, c] for e, c in terms])
    else:
        print(" ".join(f"{e}:{c}" for e, c in terms))
    return 0


# --- table ---------------------------------------------------------------

_TABLE_COLUMNS = {
    "stern": stern,
    "short_bsd": count_short_bsd_recurrence,
    "hyperbinary_prev": stern,  # hyperbinary count of n-1; s(0) = 0 covers the n = 0 row
    "width": int.bit_length,
}
_COLUMN_ALIASES = {"short": "short_bsd"}


def _cmd_table(args: argparse.Namespace) -> int:
    if args.columns is None:
        columns = list(_TABLE_COLUMNS)
    else:
        columns = []
        for token in args.columns.split(","):
            name = token.strip()
            name = _COLUMN_ALIASES.get(name, name)
            if name not in _TABLE_COLUMNS:
                raise ValueError(f"unknown column {token.strip()!r}; expected one of "
                                 f"{', '.join(_TABLE_COLUMNS)}")
            columns.append(name)
    header = ["n", *columns]
    rows = [[n, *(_TABLE_COLUMNS[c](n) for c in columns)] for n in range(args.max + 1)]
    if args.format == "json":
        print(json.dumps([dict(zip(header, row)) for row in rows]))
    elif args.format == "csv":
        _print_csv(header, rows)
    else:
        print(" ".join(header))
        for row in rows:
            print(" ".join(str(cell) for cell in row))
    return 0


# --- verify ----------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace) -> int:
    config = VerifyConfig(fail_fast=args.fail_fast)
    if args.max_n is not None:
        config.theorem1_max_n = args.max_n
        config.theorem2_max_n = args.max_n
        config.theorem3_max_n = args.max_n
        config.reznick_max_n = args.max_n
    if args.max_i is not None:
        config.monroe_max_i = args.max_i
        config.stolarsky_max_i = args.max_i
    if args.max_j is not None:
        config.stolarsky_max_j = args.max_j
    if args.max_m is not None:
        config.gf_max_m = args.max_m
    only = None if args.check == "all" else args.check
    report = run_all(config, only=only)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.passed else 1


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sternbsd",
        description="Stern sequence values and exhaustive enumeration, counting and "
                    "verification of short signed-digit and hyperbinary representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stern", help="evaluate the Stern sequence s(n)")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(handler=_cmd_stern)

    p = sub.add_parser("enumerate", help="list representations of n")
    p.add_argument("kind", choices=("short-bsd", "fixed", "hyperbinary"))
    p.add_argument("n", type=int)
    p.add_argument("i", type=int, nargs="?", default=None,
                   help="digit width (required for 'fixed')")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("count", help="count representations of n")
    p.add_argument("kind", choices=("short-bsd", "fixed", "hyperbinary"))
    p.add_argument("n", type=int)
    p.add_argument("--i", type=int, default=None, help="digit width (required for 'fixed')")
    p.add_argument("--method", choices=("closed-form", "recurrence", "enumerate", "all"),
                   default="closed-form")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("map", help="apply the hyperbinary/short-BSD bijection to a digit string")
    p.add_argument("direction", choices=("hb-to-bsd", "bsd-to-hb"))
    p.add_argument("digits")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("series", help="print a truncated generating function")
    p.add_argument("side", choices=("lhs", "rhs"))
    p.add_argument("m", type=_nonnegative, metavar="M")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("table", help="tabulate counts for n = 0..N")
    p.add_argument("--max", type=_nonnegative, required=True, metavar="N")
    p.add_argument("--columns", default=None,
                   help="comma-separated subset of: " + ", ".join(_TABLE_COLUMNS))
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("verify", help="machine-check the counting identities")
    p.add_argument("--check", choices=("all", *CHECK_NAMES), default="all")
    p.add_argument("--max-n", type=_nonnegative, default=None)
    p.add_argument("--max-i", type=_nonnegative, default=None)
    p.add_argument("--max-j", type=_nonnegative, default=None)
    p.add_argument("--max-M", dest="max_m", type=_nonnegative, default=None)
    p.add_argument("--fail-fast", action="store_true",
                   help="stop at the first failing check")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
