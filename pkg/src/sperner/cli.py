"""Command-line interface.

Subcommands: construct, verify, bounds, search, fixtures.  Exit codes are
stable: 0 success, 1 parse error, 2 invalid system, 3 search budget
exhausted, 64 usage error.  Result output goes to stdout and is
byte-stable across runs; timing diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import sp_bounds
from .construct import (
    construct_2k1,
    construct_2k2,
    construct_3k1,
    construct_auto,
    construct_k2,
    extend_by_one,
    latin_lift,
)
from .fixtures import fixture_names, load_fixture
from .formats import ParseError, parse, serialize
from .model import PartitionSystem, format_report, verify_sperner
from .search import solve_sp

EX_OK = 0
EX_PARSE = 1
EX_INVALID = 2
EX_BUDGET = 3
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sperner", description="Sperner k-partition systems toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a system for (n, k)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument(
        "--method",
        choices=["auto", "k2", "dev-2k1", "dev-2k2", "dev-3k1", "latin-lift", "extend"],
        default="auto",
    )
    c.add_argument("-o", "--output", help="write the document here instead of stdout")
    c.add_argument("--format", choices=["text", "json"], default="text")

    v = sub.add_parser("verify", help="verify a system document")
    v.add_argument("file")
    v.add_argument("--report", action="store_true", help="list every violation")

    b = sub.add_parser("bounds", help="best-known bounds for SP(n, k)")
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--table", action="store_true", help="print a table for n = k..max-n")
    b.add_argument("--max-n", type=int, dest="max_n")

    s = sub.add_parser("search", help="exhaustive maximum-system search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--min-class-size", type=int, default=2, dest="min_class_size")
    s.add_argument("--time-limit", type=float, dest="time_limit")
    s.add_argument("--target", type=int)
    s.add_argument("--exact", action="store_true", help="run to a proven optimum")
    s.add_argument("--symmetry", action="store_true", help="restrict roots to shape representatives")
    s.add_argument("-o", "--output", help="write the best system found to this file")
    s.add_argument("--format", choices=["text", "json"], default="text")

    f = sub.add_parser("fixtures", help="bundled reference systems")
    fsub = f.add_subparsers(dest="fixtures_command", required=True)
    fsub.add_parser("list", help="list bundled systems")
    fe = fsub.add_parser("emit", help="write one bundled system")
    fe.add_argument("name")
    fe.add_argument("-o", "--output")
    fe.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def _emit(system: PartitionSystem, output: str | None, fmt: str) -> None:
    doc = serialize(system, fmt=fmt)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)


def _cmd_construct(args) -> int:
    n, k = args.n, args.k
    try:
        if args.method == "auto":
            system = construct_auto(n, k)
        elif args.method == "k2":
            if k != 2:
                raise ValueError("--method k2 requires --k 2")
            system = construct_k2(n)
        elif args.method == "dev-2k1":
            if n != 2 * k + 1:
                raise ValueError("--method dev-2k1 requires n = 2k+1")
            system = construct_2k1(k)
        elif args.method == "dev-2k2":
            if n != 2 * k + 2:
                raise ValueError("--method dev-2k2 requires n = 2k+2")
            system = construct_2k2(k)
        elif args.method == "dev-3k1":
            if n != 3 * k - 1:
                raise ValueError("--method dev-3k1 requires n = 3k-1")
            system = construct_3k1(k)
        elif args.method == "latin-lift":
            system = latin_lift(construct_auto(n - k, k)).with_name(f"latin-lift({n},{k})")
        elif args.method == "extend":
            system = extend_by_one(construct_auto(n - 1, k)).with_name(f"extend({n},{k})")
        else:  # pragma: no cover
            raise ValueError(f"unknown method {args.method}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    report = verify_sperner(system)
    if not report.valid:  # constructions verify internally; this is belt and braces
        print(format_report(system, report), file=sys.stderr)
        return EX_INVALID
    _emit(system, args.output, args.format)
    return EX_OK


def _cmd_verify(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE
    try:
        system = parse(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_PARSE
    report = verify_sperner(system)
    if report.valid:
        print(format_report(system, report))
        return EX_OK
    if args.report:
        print(format_report(system, report))
    else:
        print(
            f"invalid: {len(report.violations)} violations, "
            f"{len(report.wellformed_errors)} well-formedness errors"
        )
    return EX_INVALID


def _format_bound_line(n: int, k: int) -> list[str]:
    result = sp_bounds(n, k)
    status = "exact" if result.exact else "open"
    lines = [f"SP({n},{k}): lower {result.lower}, upper {result.upper} ({status})"]
    for rule, detail in result.lower_provenance:
        lines.append(f"  lower <- {rule}: {detail}")
    for rule, detail in result.upper_provenance:
        lines.append(f"  upper <- {rule}: {detail}")
    return lines


def _cmd_bounds(args) -> int:
    k = args.k
    if args.table:
        max_n = args.max_n
        if max_n is None:
            print("error: --table requires --max-n", file=sys.stderr)
            return EX_USAGE
        print(f"{'n':>4} {'k':>4} {'lower':>12} {'upper':>12}  status")
        for n in range(k, max_n + 1):
            result = sp_bounds(n, k)
            status = "exact" if result.exact else "open"
            print(f"{n:>4} {k:>4} {result.lower:>12} {result.upper:>12}  {status}")
        return EX_OK
    if args.n is None:
        print("error: --n is required without --table", file=sys.stderr)
        return EX_USAGE
    for line in _format_bound_line(args.n, k):
        print(line)
    return EX_OK


def _cmd_search(args) -> int:
    try:
        outcome = solve_sp(
            args.n,
            args.k,
            min_class_size=args.min_class_size,
            time_budget=args.time_limit,
            target=None if args.exact else args.target,
            symmetry_reduction=args.symmetry,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    print(f"SP({args.n},{args.k}) search: size {outcome.size}", end=" ")
    print("(proven maximum)" if outcome.proven_optimal else "(not proven maximum)")
    print(
        f"nodes {outcome.nodes_explored}, elapsed {outcome.elapsed:.2f}s, "
        f"root bound {outcome.root_bound}",
        file=sys.stderr,
    )
    if args.output and outcome.best is not None:
        _emit(outcome.best, args.output, args.format)
    target_met = args.target is not None and outcome.size >= args.target
    if outcome.proven_optimal or target_met:
        return EX_OK
    return EX_BUDGET


def _cmd_fixtures(args) -> int:
    if args.fixtures_command == "list":
        for name in fixture_names():
            system = load_fixture(name)
            print(f"{name}: n={system.n} k={system.k} partitions={len(system)}")
        return EX_OK
    if args.fixtures_command == "emit":
        if args.name not in fixture_names():
            print(
                f"error: unknown fixture {args.name!r}; available: {', '.join(fixture_names())}",
                file=sys.stderr,
            )
            return EX_USAGE
        _emit(load_fixture(args.name), args.output, args.format)
        return EX_OK
    return EX_USAGE  # pragma: no cover


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    handlers = {
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "bounds": _cmd_bounds,
        "search": _cmd_search,
        "fixtures": _cmd_fixtures,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
