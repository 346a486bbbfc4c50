"""Record assembly and deterministic emitters (JSON, table, CSV, SVG).

One :class:`OfnRecord` is produced per (input, window).  Emitters are pure
string builders: identical records yield byte-identical output, floats are
serialised with 17 significant digits in JSON, and printed decimals use
the underlying float's half-even rounding.  Nothing here writes files;
the CLI composes full documents first so partial output is never written.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Literal, Sequence

from .averages import EXPONENTIAL, SIMPLE, WeightScheme, std_dev
from .baselines import build_mb_ofn, build_piasecki_ofn
from .errors import ImproperShape, OfnError
from .ingest import SeriesWindow, WindowSpec, make_windows, parse_csv
from .ofn import TrapezoidalOFN, build_ofn
from .stats import OfnSummary, summarize

__all__ = [
    "Method",
    "OutputFormat",
    "RunConfig",
    "OfnRecord",
    "record_from_window",
    "build_records",
    "emit_json",
    "emit_table",
    "emit_csv",
    "emit_svg",
    "render",
]

Method = Literal["new", "mb", "piasecki"]
OutputFormat = Literal["json", "table", "csv", "svg"]

TABLE_COLUMNS = (
    "Label",
    "a0-",
    "a0+",
    "S1",
    "S2",
    "sigma",
    "X_[1]",
    "X_[n]",
    "Skew",
    "Imprecision",
    "DirectionStrength",
)


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs: inputs, windowing, method, output."""

    inputs: tuple[Path, ...]
    window: WindowSpec
    labels: tuple[str, ...] = ()
    field: str = "close"
    method: Method = "new"
    scheme: WeightScheme = EXPONENTIAL
    mb_schemes: tuple[WeightScheme, WeightScheme] = (SIMPLE, EXPONENTIAL)
    fmt: OutputFormat = "json"
    summaries_only: bool = False
    json_lines: bool = False
    extended_precision: bool = False
    out: Path | None = None

    def __post_init__(self) -> None:
        if not self.inputs:
            raise ValueError("at least one input file is required")
        if self.labels and len(self.labels) != len(self.inputs):
            raise ValueError("number of labels must match number of inputs")
        if self.method not in ("new", "mb", "piasecki"):
            raise ValueError(f"unknown method {self.method!r}")

    def label_for(self, index: int) -> str:
        if self.labels:
            return self.labels[index]
        return self.inputs[index].stem


@dataclass(frozen=True)
class OfnRecord:
    """One emitted row: endpoints, branch coefficients, and statistics.

    Statistics are None for improper shapes (endpoints are still echoed).
    Branch coefficients reproduce the endpoints exactly at grades 0 and 1.
    """

    label: str
    method: str
    field: str
    window_start: date | None
    window_end: date | None
    n: int
    orientation: str
    proper: bool
    a0_minus: float
    a1_minus: float
    a1_plus: float
    a0_plus: float
    up_intercept: float
    up_slope: float
    down_intercept: float
    down_slope: float
    sigma: float
    first_value: float
    last_value: float
    area: float | None
    imprecision: float | None
    skew: float | None
    direction_strength: float | None

    def to_dict(self) -> dict:
        """Flat mapping in the canonical key order used by the JSON emitter."""
        return {
            "label": self.label,
            "method": self.method,
            "field": self.field,
            "window_start": self.window_start.isoformat() if self.window_start else None,
            "window_end": self.window_end.isoformat() if self.window_end else None,
            "n": self.n,
            "orientation": self.orientation,
            "proper": self.proper,
            "a0_minus": self.a0_minus,
            "a1_minus": self.a1_minus,
            "a1_plus": self.a1_plus,
            "a0_plus": self.a0_plus,
            "up_intercept": self.up_intercept,
            "up_slope": self.up_slope,
            "down_intercept": self.down_intercept,
            "down_slope": self.down_slope,
            "sigma": self.sigma,
            "first_value": self.first_value,
            "last_value": self.last_value,
            "area": self.area,
            "imprecision": self.imprecision,
            "skew": self.skew,
            "direction_strength": self.direction_strength,
        }


def _trapezoid_for(window: SeriesWindow, config: RunConfig) -> TrapezoidalOFN:
    if config.method == "new":
        return build_ofn(window, config.scheme)
    if config.method == "mb":
        return build_mb_ofn(window, *config.mb_schemes).as_trapezoid()
    return build_piasecki_ofn(window).as_trapezoid()


def record_from_window(window: SeriesWindow, trap: TrapezoidalOFN, method: str, label: str) -> OfnRecord:
    """Flatten one built shape into an emission record."""
    summary: OfnSummary | None = None
    if trap.proper:
        summary = summarize(window, trap, label=label)
    up, down = trap.up_branch, trap.down_branch
    has_dates = window.bars is not None
    return OfnRecord(
        label=label,
        method=method,
        field=window.field,
        window_start=window.start_date if has_dates else None,
        window_end=window.end_date if has_dates else None,
        n=window.n,
        orientation=trap.orientation.value,
        proper=trap.proper,
        a0_minus=trap.a0_minus,
        a1_minus=trap.a1_minus,
        a1_plus=trap.a1_plus,
        a0_plus=trap.a0_plus,
        up_intercept=up.intercept,
        up_slope=up.slope,
        down_intercept=down.intercept,
        down_slope=down.slope,
        sigma=std_dev(window.values),
        first_value=window.values[0],
        last_value=window.values[-1],
        area=summary.area if summary else None,
        imprecision=summary.imprecision if summary else None,
        skew=summary.skew if summary else None,
        direction_strength=summary.direction_strength if summary else None,
    )


def build_records(config: RunConfig) -> list[OfnRecord]:
    """Parse every input, window it, build shapes, and return records in
    deterministic order (label, then window start date)."""
    records: list[OfnRecord] = []
    for idx, path in enumerate(config.inputs):
        label = config.label_for(idx)
        try:
            bars = parse_csv(path.read_text(encoding="utf-8"))
            windows = make_windows(bars, config.window, config.field, label)
            for window in windows:
                trap = _trapezoid_for(window, config)
                records.append(record_from_window(window, trap, config.method, label))
        except OfnError as exc:
            exc.source = str(path)  # lets the CLI name the offending file
            raise
    records.sort(key=lambda r: (r.label, r.window_start or date.min))
    return records


# -- JSON ------------------------------------------------------------------


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return json.dumps(value, ensure_ascii=False)


def _json_object(mapping: dict) -> str:
    return "{" + ", ".join(f"{json.dumps(k)}: {_json_scalar(v)}" for k, v in mapping.items()) + "}"


def emit_json(records: Sequence[OfnRecord], lines: bool = False, summaries_only: bool = False) -> str:
    """Records as a JSON array (or JSON lines), stable key order, floats at
    17 significant digits, undefined statistics as null."""
    dicts = [_summary_dict(r) if summaries_only else r.to_dict() for r in records]
    objects = [_json_object(d) for d in dicts]
    if lines:
        return "".join(o + "\n" for o in objects)
    if not objects:
        return "[]\n"
    return "[\n" + ",\n".join("  " + o for o in objects) + "\n]\n"


def _summary_dict(record: OfnRecord) -> dict:
    return {
        "label": record.label,
        "a0_minus": record.a0_minus,
        "a0_plus": record.a0_plus,
        "s1": record.a1_minus,
        "s2": record.a1_plus,
        "sigma": record.sigma,
        "first_value": record.first_value,
        "last_value": record.last_value,
        "skew": record.skew,
        "imprecision": record.imprecision,
        "direction_strength": record.direction_strength,
        "area": record.area,
    }


# -- table / CSV -------------------------------------------------------------


def _table_cells(record: OfnRecord, extended: bool) -> list[str]:
    def num(v: float | None, places: int = 2) -> str:
        return "n/a" if v is None else f"{v:.{places}f}"

    skew_cell = "n/a" if not record.proper else ("undef" if record.skew is None else f"{record.skew:.2f}")
    return [
        record.label,
        num(record.a0_minus),
        num(record.a0_plus),
        num(record.a1_minus),
        num(record.a1_plus),
        num(record.sigma),
        num(record.first_value),
        num(record.last_value),
        skew_cell,
        num(record.imprecision, 7 if extended else 2),
        num(record.direction_strength),
    ]


def emit_table(records: Sequence[OfnRecord], extended_precision: bool = False) -> str:
    """Fixed-width text table.  Prices and statistics print to 2 decimals;
    with ``extended_precision`` the imprecision column prints 7 decimals."""
    rows = [list(TABLE_COLUMNS)] + [_table_cells(r, extended_precision) for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(TABLE_COLUMNS))]
    out_lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        out_lines.append("  ".join(cells).rstrip())
    out_lines.insert(1, "-" * max(map(len, out_lines)))
    return "\n".join(out_lines) + "\n"


def emit_csv(records: Sequence[OfnRecord], extended_precision: bool = False) -> str:
    """Same columns and rounding as the table, in CSV form."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for r in records:
        writer.writerow(_table_cells(r, extended_precision))
    return out.getvalue()


# -- SVG ---------------------------------------------------------------------

_SVG_W, _SVG_H = 640, 440
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 70, 170, 40, 50


def _fmt(x: float) -> str:
    """Coordinate formatting: fixed 2 decimals keeps documents byte-stable."""
    return f"{x:.2f}"


def _branch_label(intercept: float, slope: float) -> str:
    if slope >= 0:
        return f"{intercept:.2f} + {slope:.2f}α"
    return f"{intercept:.2f} - {abs(slope):.2f}α"


def emit_svg(record: OfnRecord) -> str:
    """Standalone SVG 1.1 figure of one record.

    Grade runs along the horizontal axis, value along the vertical; the two
    branch polylines carry mid-line arrowheads in traversal order (up branch
    grade 0 -> 1, down branch 1 -> 0), a vertical segment marks the core at
    grade 1, and the value axis is padded 5% beyond the support.
    """
    if not record.proper:
        raise ImproperShape("cannot plot an improper shape")

    lo, hi = record.a0_minus, record.a0_plus
    pad = 0.05 * (hi - lo) if hi > lo else max(0.5, 0.05 * abs(hi))
    v_min, v_max = lo - pad, hi + pad

    plot_w = _SVG_W - _MARGIN_L - _MARGIN_R
    plot_h = _SVG_H - _MARGIN_T - _MARGIN_B

    def sx(alpha: float) -> float:
        return _MARGIN_L + alpha * plot_w

    def sy(value: float) -> float:
        return _MARGIN_T + (v_max - value) / (v_max - v_min) * plot_h

    def up_at(a: float) -> float:
        return record.up_intercept + a * record.up_slope

    def down_at(a: float) -> float:
        return record.down_intercept + a * record.down_slope

    def polyline(alphas: Sequence[float], value_at, cls: str) -> str:
        pts = " ".join(f"{_fmt(sx(a))},{_fmt(sy(value_at(a)))}" for a in alphas)
        return f'<polyline class="{cls}" points="{pts}" marker-mid="url(#arrow)"/>'

    title = f"{record.label} {record.field}"
    if record.window_start and record.window_end:
        title += f" {record.window_start.isoformat()}..{record.window_end.isoformat()}"
    title += f" ({record.method})"

    value_ticks = [v_min + i * (v_max - v_min) / 4 for i in range(5)]
    alpha_ticks = [0.0, 0.25, 0.5, 0.75, 1.0]

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 8 8" refX="4" refY="4" markerWidth="7" markerHeight="7" orient="auto">',
        '<path d="M0,0 L8,4 L0,8 z" fill="#1f4e9c"/>',
        "</marker>",
        "</defs>",
        "<style>",
        "text { font-family: sans-serif; font-size: 12px; fill: #222; }",
        ".axis { stroke: #444; stroke-width: 1; }",
        ".grid { stroke: #ddd; stroke-width: 0.5; }",
        ".branch { stroke: #1f4e9c; stroke-width: 2; fill: none; }",
        ".core { stroke: #1f4e9c; stroke-width: 3; }",
        "</style>",
        f'<text x="{_fmt(_SVG_W / 2)}" y="20" text-anchor="middle">{_escape(title)}</text>',
    ]

    for v in value_ticks:
        y = _fmt(sy(v))
        parts.append(f'<line class="grid" x1="{_fmt(sx(0))}" y1="{y}" x2="{_fmt(sx(1))}" y2="{y}"/>')
        parts.append(f'<text x="{_fmt(sx(0) - 8)}" y="{y}" text-anchor="end" dominant-baseline="middle">{v:.2f}</text>')
    for a in alpha_ticks:
        x = _fmt(sx(a))
        y0, y1 = _fmt(sy(v_min)), _fmt(sy(v_min) + 4)
        parts.append(f'<line class="axis" x1="{x}" y1="{y0}" x2="{x}" y2="{y1}"/>')
        parts.append(f'<text x="{x}" y="{_fmt(sy(v_min) + 18)}" text-anchor="middle">{a:g}</text>')

    parts.append(
        f'<line class="axis" x1="{_fmt(sx(0))}" y1="{_fmt(sy(v_min))}" x2="{_fmt(sx(1))}" y2="{_fmt(sy(v_min))}"/>'
    )
    parts.append(
        f'<line class="axis" x1="{_fmt(sx(0))}" y1="{_fmt(sy(v_min))}" x2="{_fmt(sx(0))}" y2="{_fmt(sy(v_max))}"/>'
    )
    parts.append(f'<text x="{_fmt(sx(1) + 10)}" y="{_fmt(sy(v_min) + 4)}">α</text>')

    # up branch traverses grade 0 -> 1, down branch 1 -> 0
    parts.append(polyline([0.0, 0.5, 1.0], up_at, "branch"))
    parts.append(polyline([1.0, 0.5, 0.0], down_at, "branch"))
    parts.append(
        f'<line class="core" x1="{_fmt(sx(1))}" y1="{_fmt(sy(up_at(1)))}" x2="{_fmt(sx(1))}" y2="{_fmt(sy(down_at(1)))}"/>'
    )

    label_x = _fmt(sx(1) + 16)
    parts.append(
        f'<text x="{label_x}" y="{_fmt(sy(up_at(1)))}">↑ {_escape(_branch_label(record.up_intercept, record.up_slope))}</text>'
    )
    parts.append(
        f'<text x="{label_x}" y="{_fmt(sy(down_at(1)) + 14)}">↓ {_escape(_branch_label(record.down_intercept, record.down_slope))}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render(config: RunConfig, records: Sequence[OfnRecord]) -> list[tuple[str | None, str]]:
    """Compose every output document for ``config``.

    Returns (relative filename or None for the main stream, content) pairs;
    SVG output yields one document per record, everything else exactly one.
    """
    if config.fmt == "svg":
        docs = []
        for r in records:
            start = r.window_start.isoformat() if r.window_start else "series"
            end = r.window_end.isoformat() if r.window_end else str(r.n)
            docs.append((f"{r.label}_{start}_{end}.svg", emit_svg(r)))
        return docs
    if config.fmt == "table":
        return [(None, emit_table(records, config.extended_precision))]
    if config.fmt == "csv":
        return [(None, emit_csv(records, config.extended_precision))]
    return [(None, emit_json(records, lines=config.json_lines, summaries_only=config.summaries_only))]
