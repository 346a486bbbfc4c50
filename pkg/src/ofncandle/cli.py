"""Command-line interface.

Verbs:
    build   -- emit one JSON record per (input, window)
    report  -- text table or CSV of the summary columns
    plot    -- standalone SVG figure(s), one per record
    stats   -- JSON summaries only (no branch coefficients)

Exit codes: 0 success, 2 usage error, 3 data error.  Output documents are
composed in full before anything is written, so a failing run never leaves
partial output behind.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .averages import scheme_from_name
from .errors import OfnError
from .ingest import FIELDS, WindowSpec, parse_date
from .report import RunConfig, build_records, render

__all__ = ["main", "make_parser", "config_from_args"]

USAGE_ERROR = 2
DATA_ERROR = 3


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ofncandle",
        description="Summarise windowed time series as trapezoidal ordered fuzzy numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", required=True, type=Path, metavar="CSV",
                        help="OHLCV CSV file; repeat for several series")
    common.add_argument("--label", action="append", default=None, metavar="NAME",
                        help="label per input (default: file stem); repeat to match --input")
    common.add_argument("--field", default="close", choices=FIELDS,
                        help="which scalar to extract (default: close)")
    common.add_argument("--window", default=None, metavar="START:END",
                        help='date-range window, e.g. "2019-12-03:2019-12-31"')
    common.add_argument("--size", type=int, default=None, help="fixed window length (bars)")
    common.add_argument("--stride", type=int, default=1, help="step between fixed windows (default 1)")
    common.add_argument("--scheme", default="ea", choices=("sa", "lwa", "ea"),
                        help="weighted average for the core (default ea)")
    common.add_argument("--mb-schemes", default="sa,ea", metavar="A,B",
                        help="the two averages for the mass-balanced method (default sa,ea)")
    common.add_argument("--method", default="new", choices=("new", "mb", "piasecki"),
                        help="construction to use (default new)")
    common.add_argument("--out", type=Path, default=None,
                        help="output file (or directory for multiple SVGs); default stdout")

    p_build = sub.add_parser("build", parents=[common], help="emit full JSON records")
    p_build.add_argument("--lines", action="store_true", help="JSON lines instead of an array")

    p_report = sub.add_parser("report", parents=[common], help="summary table")
    p_report.add_argument("--format", default="table", choices=("table", "csv"), dest="fmt")
    p_report.add_argument("--extended-precision", action="store_true",
                          help="print the imprecision column to 7 decimals")

    sub.add_parser("plot", parents=[common], help="SVG figure per record")

    p_stats = sub.add_parser("stats", parents=[common], help="JSON summaries only")
    p_stats.add_argument("--lines", action="store_true", help="JSON lines instead of an array")

    return parser


def _window_spec(args: argparse.Namespace, parser: argparse.ArgumentParser) -> WindowSpec:
    if (args.window is None) == (args.size is None):
        parser.error("exactly one of --window START:END or --size N is required")
    if args.window is not None:
        try:
            start_text, end_text = args.window.split(":", 1)
            return WindowSpec.date_range(parse_date(start_text), parse_date(end_text))
        except ValueError as exc:
            parser.error(f"bad --window value {args.window!r}: {exc}")
    try:
        return WindowSpec.fixed_size(args.size, args.stride)
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


def config_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    window = _window_spec(args, parser)
    try:
        mb_pair = tuple(scheme_from_name(s) for s in args.mb_schemes.split(","))
        if len(mb_pair) != 2:
            raise ValueError("expected exactly two comma-separated schemes")
    except ValueError as exc:
        parser.error(f"bad --mb-schemes value {args.mb_schemes!r}: {exc}")

    fmt = {"build": "json", "report": getattr(args, "fmt", "table"),
           "plot": "svg", "stats": "json"}[args.command]
    try:
        return RunConfig(
            inputs=tuple(args.input),
            labels=tuple(args.label) if args.label else (),
            field=args.field,
            window=window,
            method=args.method,
            scheme=scheme_from_name(args.scheme),
            mb_schemes=mb_pair,  # type: ignore[arg-type]
            fmt=fmt,  # type: ignore[arg-type]
            summaries_only=args.command == "stats",
            json_lines=getattr(args, "lines", False),
            extended_precision=getattr(args, "extended_precision", False),
            out=args.out,
        )
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


def _write_documents(docs: list[tuple[str | None, str]], out: Path | None) -> None:
    if len(docs) == 1:
        name, content = docs[0]
        if out is None:
            sys.stdout.write(content)
        elif out.is_dir():
            (out / (name or "output.txt")).write_text(content, encoding="utf-8")
        else:
            out.write_text(content, encoding="utf-8")
        return
    # several documents (SVG per record) need a directory
    if out is None:
        raise OfnError("several output documents; pass --out DIRECTORY")
    out.mkdir(parents=True, exist_ok=True)
    for name, content in docs:
        (out / (name or "output.svg")).write_text(content, encoding="utf-8")


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args, parser)

    for path in config.inputs:
        if not path.is_file():
            print(f"error: {path}: no such file", file=sys.stderr)
            return DATA_ERROR
    try:
        records = build_records(config)
        docs = render(config, records)
        _write_documents(docs, config.out)
    except OfnError as exc:
        source = getattr(exc, "source", None)
        prefix = f"{source}: " if source else ""
        print(f"error: {prefix}{exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
