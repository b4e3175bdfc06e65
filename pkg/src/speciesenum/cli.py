"""Command-line front end.

    speciesenum ktrees --k 3 --n 30
    speciesenum bpblocks --n 10 --format csv
    speciesenum species --name Omega --degree 4 --format json
    speciesenum verify --suite tables

Exit status: 0 on success, 1 on bad usage, 2 when a computation or check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .bipartite import BipartitePipeline
from .cycleindex import CycleIndexSeries, ci_standard
from .gammaspecies import GammaCycleIndex
from .ktrees import ktree_counts
from .powerseries import NonIntegralCount
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2

SPECIES = ("BC", "CBC", "CBP", "BP", "NBP", "Omega")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--output", "-o", help="write results here instead of stdout")

    parser = _Parser(prog="speciesenum", description="Exact species enumeration of k-trees and bipartite blocks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ktrees", parents=[common], help="unlabeled k-trees by number of hedra")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_nonnegative, required=True, help="largest hedron count")

    p = sub.add_parser("bpblocks", parents=[common], help="unlabeled bipartite blocks by vertex count")
    p.add_argument("--n", type=_positive, required=True, help="largest vertex count")

    p = sub.add_parser("species", parents=[common], help="print a cycle index as monomial records")
    p.add_argument("--name", choices=SPECIES, required=True)
    p.add_argument("--degree", type=_positive, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a suite of consistency checks")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    return parser


# rendering


def _render(command: str, params: dict, columns: list[str], rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        doc = {"command": command, "params": params, "results": rows}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
        return buf.getvalue()
    return "".join(" ".join(str(row[c]) for c in columns).rstrip() + "\n" for row in rows)


def _count_rows(start: int, counts: Sequence[int]) -> list[dict]:
    return [{"n": start + i, "count": str(c)} for i, c in enumerate(counts)]


def _species_series(name: str, degree: int) -> CycleIndexSeries | GammaCycleIndex:
    if name == "Omega":
        return ci_standard("Omega", degree)
    pipeline = BipartitePipeline(degree)
    return getattr(pipeline, name.lower())


def _species_rows(series) -> tuple[list[str], list[dict]]:
    if isinstance(series, GammaCycleIndex):
        rows = [
            {"component": str(key), "monomial": m, "coefficient": c}
            for key, comp in series.items()
            for m, c in comp.sorted_records()
        ]
        return ["component", "monomial", "coefficient"], rows
    rows = [{"monomial": m, "coefficient": c} for m, c in series.sorted_records()]
    return ["monomial", "coefficient"], rows


def run(args: argparse.Namespace) -> tuple[int, str]:
    """Carry out a parsed command; returns (exit status, rendered output)."""
    if args.command == "ktrees":
        counts = ktree_counts(args.k, args.n)
        return EXIT_OK, _render("ktrees", {"k": args.k, "n": args.n}, ["n", "count"], _count_rows(0, counts), args.format)
    if args.command == "bpblocks":
        counts = BipartitePipeline(args.n).block_counts()
        return EXIT_OK, _render("bpblocks", {"n": args.n}, ["n", "count"], _count_rows(1, counts), args.format)
    if args.command == "species":
        columns, rows = _species_rows(_species_series(args.name, args.degree))
        params = {"name": args.name, "degree": args.degree}
        return EXIT_OK, _render("species", params, columns, rows, args.format)
    if args.command == "verify":
        results = run_suite(args.suite)
        rows = [{"check": r.name, "status": "PASS" if r.passed else "FAIL", "detail": r.detail} for r in results]
        status = EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE
        return status, _render("verify", {"suite": args.suite}, ["status", "check", "detail"], rows, args.format)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        status, text = run(args)
    except NonIntegralCount as exc:
        print(f"speciesenum: integrality check failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (ArithmeticError, ValueError, AssertionError) as exc:
        print(f"speciesenum: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
