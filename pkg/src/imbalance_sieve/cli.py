"""Command-line front end: enumeration, rank/unrank, verification, density."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Callable, Iterable, Sequence

from . import verify as verify_mod
from .arith import Fraction, make_fraction
from .qenum import q_rank, q_unrank
from .sieve import (
    count_new_denominators,
    distinct_fraction_at,
    first_appearance_order,
    fraction_rank,
    sieve_stream,
)

FORMATS = ("tsv", "csv", "jsonl", "bfile")
ROW_FORMATS = ("tsv", "csv", "jsonl")
_CHECK_KEYS = ("gcd", "firsts", "bijection", "qenum", "density")
_DENSITY_CHECKPOINTS = (14, 1_000, 10_000, 100_000)


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or a bare integer into a reduced fraction."""
    parts = text.strip().split("/")
    if len(parts) == 1:
        return make_fraction(int(parts[0]), 1)
    if len(parts) == 2:
        return make_fraction(int(parts[0]), int(parts[1]))
    raise ValueError(f"cannot parse rational {text!r}")


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _at_least(minimum: int) -> Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return value

    return convert


def _check_list(text: str) -> tuple[str, ...]:
    keys = tuple(key.strip() for key in text.split(",") if key.strip())
    if not keys:
        raise argparse.ArgumentTypeError("no checks selected")
    for key in keys:
        if key not in _CHECK_KEYS:
            raise argparse.ArgumentTypeError(
                f"unknown check {key!r} (choose from {', '.join(_CHECK_KEYS)})"
            )
    return keys


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _emit_rows(columns: Sequence[str], rows: Iterable[Sequence[object]], fmt: str) -> None:
    """Write rows in the chosen format; header only when rows exist."""
    out = sys.stdout
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(dict(zip(columns, row))) + "\n")
        return
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        wrote_header = False
        for row in rows:
            if not wrote_header:
                writer.writerow(columns)
                wrote_header = True
            writer.writerow([_cell(v) for v in row])
        return
    wrote_header = False
    for row in rows:
        if not wrote_header:
            out.write("\t".join(columns) + "\n")
            wrote_header = True
        out.write("\t".join(_cell(v) for v in row) + "\n")


def _cmd_sieve(args: argparse.Namespace) -> int:
    rows = (
        (item.index, item.pair.p, item.pair.q, item.value.num, item.value.den, item.is_new_denominator)
        for item in sieve_stream(args.start, args.limit)
    )
    _emit_rows(("index", "p", "q", "numerator", "denominator", "is_new"), rows, args.format)
    return 0


def _cmd_firsts(args: argparse.Namespace) -> int:
    records = first_appearance_order(args.count)
    if args.format == "bfile":
        for n, fa in enumerate(records, start=1):
            sys.stdout.write(f"{n} {fa.d}\n")
        return 0
    rows = ((rank, fa.d, fa.index, fa.pair.p, fa.pair.q) for rank, fa in enumerate(records))
    _emit_rows(("rank", "d", "index", "p", "q"), rows, args.format)
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    value = parse_rational(args.value)
    print(q_rank(value) if args.space == "q" else fraction_rank(value))
    return 0


def _cmd_unrank(args: argparse.Namespace) -> int:
    print(q_unrank(args.n) if args.space == "q" else distinct_fraction_at(args.n).value)
    return 0


def _cmd_density(args: argparse.Namespace) -> int:
    targets = {args.max_index}
    power = 1
    while power <= args.max_index:
        targets.add(power)
        power *= 10
    rows = []
    for i in sorted(targets):
        count = count_new_denominators(i)
        rows.append((i, count, f"{count / math.sqrt(i):.6f}"))
    _emit_rows(("index", "count", "ratio"), rows, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    density_targets = sorted(
        {c for c in _DENSITY_CHECKPOINTS if c <= args.max_index} | {args.max_index}
    )
    runners = {
        "gcd": lambda: verify_mod.check_gcd_lemma(args.max_p),
        "firsts": lambda: verify_mod.check_first_appearance(args.max_d),
        "bijection": lambda: verify_mod.check_bijection(args.count),
        "qenum": lambda: verify_mod.check_q_enumeration(args.count),
        "density": lambda: verify_mod.check_density(density_targets),
    }
    all_passed = True
    for key in args.checks:
        report = runners[key]()
        status = "PASS" if report.passed else "FAIL"
        print(f"{report.check_name} [{report.bound}] {status} items_tested={report.items_tested}")
        for note in report.notes:
            print(f"  note: {note}")
        for ce in report.counterexamples:
            print(f"  counterexample: {ce.input} expected={ce.expected} actual={ce.actual}")
        if report.failures > len(report.counterexamples):
            print(f"  ... {report.failures} failures total")
        all_passed = all_passed and report.passed
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imbsieve",
        description="Enumerate reduced (p-q)/(p+q) fractions, rank rationals, verify the laws.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sieve_p = sub.add_parser("sieve", help="emit sieve rows in enumeration order")
    sieve_p.add_argument("--limit", type=_nonnegative, required=True, help="number of rows")
    sieve_p.add_argument("--start", type=_nonnegative, default=0, help="first index (default 0)")
    sieve_p.add_argument("--format", choices=ROW_FORMATS, default="tsv")
    sieve_p.set_defaults(handler=_cmd_sieve)

    firsts_p = sub.add_parser("firsts", help="denominators in first-appearance order")
    firsts_p.add_argument("--count", type=_nonnegative, required=True, help="number of records")
    firsts_p.add_argument("--format", choices=FORMATS, default="tsv")
    firsts_p.set_defaults(handler=_cmd_firsts)

    rank_p = sub.add_parser("rank", help="position of a rational in an enumeration")
    rank_p.add_argument("value", help="rational as 'a/b' or a bare integer; "
                                      "put -- before values starting with '-'")
    rank_p.add_argument(
        "--space",
        choices=("q", "unit"),
        default="q",
        help="q: all rationals; unit: deduplicated unit-interval stream",
    )
    rank_p.set_defaults(handler=_cmd_rank)

    unrank_p = sub.add_parser("unrank", help="rational at a given position")
    unrank_p.add_argument("n", type=_nonnegative)
    unrank_p.add_argument("--space", choices=("q", "unit"), default="q")
    unrank_p.set_defaults(handler=_cmd_unrank)

    verify_p = sub.add_parser("verify", help="run brute-force checks against the closed forms")
    verify_p.add_argument("--checks", type=_check_list, default=_CHECK_KEYS,
                          help=f"comma-separated subset of {','.join(_CHECK_KEYS)}")
    verify_p.add_argument("--max-p", type=_at_least(2), default=500, help="gcd check bound")
    verify_p.add_argument("--max-d", type=_at_least(2), default=2000,
                          help="first-appearance check bound")
    verify_p.add_argument("--count", type=_at_least(3), default=100_000,
                          help="prefix length for bijection and qenum checks")
    verify_p.add_argument("--max-index", type=_nonnegative, default=100_000,
                          help="largest density checkpoint")
    verify_p.set_defaults(handler=_cmd_verify)

    density_p = sub.add_parser("density", help="new-denominator counts and count/sqrt(i) ratios")
    density_p.add_argument("--max-index", type=_at_least(1), required=True)
    density_p.add_argument("--format", choices=ROW_FORMATS, default="tsv")
    density_p.set_defaults(handler=_cmd_density)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
