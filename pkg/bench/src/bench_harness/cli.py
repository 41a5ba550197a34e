"""Command line front end.

    bench run --spec spec.json --out reports/      one file per model
    bench run --spec spec.json --out reports.json  single envelope file
    bench check --reports reports/ --reference ref.json

Exit codes: 0 success (and, for check, all verdicts within tolerance);
1 domain failure (bad spec values, unknown model, tolerance exceeded,
missing model/metric); 2 I/O or syntax failure (missing files,
malformed JSON, usage errors).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import BenchError
from .checker import compare_to_reference
from .runner import read_reports, run_benchmark, write_reports
from .specs import load_reference, load_spec


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def cmd_run(args: argparse.Namespace) -> int:
    spec = load_spec(args.spec)
    reports = run_benchmark(
        spec, jobs=args.jobs,
        log=lambda message: print(message, file=sys.stderr))
    written = write_reports(reports, args.out, spec)
    for path in written:
        print(path)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    reports = read_reports(args.reports)
    table = load_reference(args.reference)
    result = compare_to_reference(reports, table)
    print(json.dumps(result.to_dict(), indent=2))
    return 0 if result.overall_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench",
        description="grid-search benchmarks emitting metric reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a benchmark spec")
    p.add_argument("--spec", required=True, metavar="FILE",
                   help="benchmark spec (JSON)")
    p.add_argument("--out", required=True, metavar="PATH",
                   help="output file, or directory for per-model files")
    p.add_argument("--jobs", type=int, default=None, metavar="N",
                   help="parallel workers for the grid search")
    p.set_defaults(handler=cmd_run)

    p = sub.add_parser("check", help="compare reports to a reference")
    p.add_argument("--reports", required=True, metavar="PATH",
                   help="report file or directory of report files")
    p.add_argument("--reference", required=True, metavar="FILE",
                   help="reference table (JSON)")
    p.set_defaults(handler=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except BenchError as exc:
        _fail(str(exc))
        return 1
    except json.JSONDecodeError as exc:
        _fail(f"malformed JSON: {exc}")
        return 2
    except (OSError, UnicodeDecodeError) as exc:
        _fail(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
