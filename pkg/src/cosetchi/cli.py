"""Command-line interface: analyze, verify, search, export.

Exit codes: 0 all pass, 1 assertion failure, 2 usage or parse error,
3 a cap was exceeded for a computation the user explicitly demanded.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import analyze
from .complexes import write_complex
from .cosetposet import coset_poset
from .errors import (CosetChiError, ParseError, PosetCapExceeded,
                     SimplexCapExceeded)
from .groupio import load_group_file, parse_group_expression
from .reportfmt import render_analysis, render_search, render_suites
from .suites import SUITE_IDS, run_suite, search_chi_one

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosetchi",
        description="Coset posets of p-subgroups: Euler characteristics, "
                    "homology, and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_args(p):
        p.add_argument("--group", "-g", help="constructor expression, e.g. "
                       "'S(3)xS(3)', atoms S(n) A(n) D(n) C(n) Q8 F21")
        p.add_argument("--file", help="group-definition file")

    analyze_p = sub.add_parser("analyze", help="full report for one (group, prime)")
    add_group_args(analyze_p)
    analyze_p.add_argument("--prime", "-p", type=int, required=True)
    analyze_p.add_argument("--method", choices=["formula", "intersections",
                                                "direct", "all"],
                           default="all")
    analyze_p.add_argument("--homology", action="store_true",
                           help="include integral homology of the complex")
    analyze_p.add_argument("--components", action="store_true",
                           help="include the component count")
    analyze_p.add_argument("--format", choices=["text", "json"], default="text")
    analyze_p.add_argument("--out", "-o", help="write the report to a file")

    verify_p = sub.add_parser("verify", help="run theorem suites over the catalog")
    verify_p.add_argument("--suite", choices=[*SUITE_IDS, "all"], default="all")
    verify_p.add_argument("--max-order", type=int, default=200)
    verify_p.add_argument("--prime", "-p", type=int, action="append",
                          help="restrict to these primes (repeatable)")
    verify_p.add_argument("--jobs", type=int, default=1,
                          help="parallel worker processes")
    verify_p.add_argument("--format", choices=["text", "json"], default="text")
    verify_p.add_argument("--out", "-o")

    search_p = sub.add_parser("search", help="find non-p-closed groups with "
                                             "local chi equal to 1")
    search_p.add_argument("--max-order", type=int, default=200)
    search_p.add_argument("--prime", "-p", type=int, action="append")
    search_p.add_argument("--format", choices=["text", "json"], default="text")
    search_p.add_argument("--out", "-o")

    export_p = sub.add_parser("export", help="write the order complex of the "
                                             "coset poset to a file")
    add_group_args(export_p)
    export_p.add_argument("--prime", "-p", type=int, required=True)
    export_p.add_argument("--out", "-o", required=True)
    return parser


def _load_group(args):
    if bool(args.group) == bool(args.file):
        raise ParseError("exactly one of --group or --file is required")
    if args.group:
        G, _ = parse_group_expression(args.group)
        return G
    _, G = load_group_file(args.file)
    return G


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    G = _load_group(args)
    methods = args.method
    rep = analyze(
        G, args.prime,
        with_direct=methods in ("direct", "all"),
        with_components=args.components or methods in ("direct", "all"),
        with_homology=args.homology,
    )
    _emit(render_analysis(rep, args.format), args.out)
    if methods == "direct" and rep.chi_direct is None:
        sys.stderr.write(f"error: {rep.chi_direct_skipped}\n")
        return EXIT_CAP
    if args.homology and rep.homology_betti is None:
        sys.stderr.write(f"error: {rep.homology_skipped}\n")
        return EXIT_CAP
    if args.components and rep.component_count is None:
        sys.stderr.write(f"error: {rep.components_skipped}\n")
        return EXIT_CAP
    return EXIT_OK


def _cmd_verify(args) -> int:
    primes = tuple(args.prime) if args.prime else None
    results = run_suite(args.suite, max_order=args.max_order, primes=primes,
                        jobs=args.jobs)
    _emit(render_suites(results, args.format), args.out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def _cmd_search(args) -> int:
    primes = tuple(args.prime) if args.prime else None
    findings = search_chi_one(max_order=args.max_order, primes=primes)
    _emit(render_search(findings, args.max_order, args.format), args.out)
    return EXIT_OK


def _cmd_export(args) -> int:
    G = _load_group(args)
    poset = coset_poset(G, args.prime)
    complex_ = poset.order_complex()
    _emit(write_complex(complex_, poset.vertex_labels()), args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handlers = {
        "analyze": _cmd_analyze,
        "verify": _cmd_verify,
        "search": _cmd_search,
        "export": _cmd_export,
    }
    try:
        return handlers[args.command](args)
    except (PosetCapExceeded, SimplexCapExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CosetChiError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
