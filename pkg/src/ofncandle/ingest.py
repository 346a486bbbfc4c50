"""OHLCV CSV ingestion and windowing.

Parses daily bars from CSV text, slices them into windows (one window per
date range, or a rolling size/stride sweep), and extracts the scalar series
the fuzzy-number builders consume.

Prices are held as :class:`decimal.Decimal` at their stored precision
(2 places for OHLC, 6 for the adjusted close) so that parsing and
re-serialising a file is lossless; they are converted to binary floats only
when a numeric operation needs them.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from datetime import date, datetime
from decimal import Decimal, InvalidOperation
from typing import Iterable, Literal, Sequence

from .errors import (
    DuplicateDate,
    EmptyWindow,
    MalformedRow,
    MissingColumn,
    MissingOhlc,
    SizeExceedsData,
)

__all__ = [
    "OhlcBar",
    "SeriesWindow",
    "WindowSpec",
    "FieldName",
    "parse_csv",
    "bars_to_csv",
    "make_windows",
    "series_extrema",
]

FieldName = Literal["open", "high", "low", "close", "adj_close"]

FIELDS: tuple[str, ...] = ("open", "high", "low", "close", "adj_close")

_CENT = Decimal("0.01")
_MICRO = Decimal("0.000001")

# canonical header name -> attribute
_COLUMNS = {
    "date": "date",
    "open": "open",
    "high": "high",
    "low": "low",
    "close": "close",
    "volume": "volume",
    "adj close": "adj_close",
}


@dataclass(frozen=True, slots=True)
class OhlcBar:
    """One dated OHLCV observation.

    Invariants: ``low <= min(open, close) <= max(open, close) <= high``,
    all prices positive, volume nonnegative.
    """

    date: date
    open: Decimal
    high: Decimal
    low: Decimal
    close: Decimal
    volume: int
    adj_close: Decimal

    def __post_init__(self) -> None:
        if min(self.open, self.high, self.low, self.close) <= 0 or self.adj_close <= 0:
            raise ValueError("prices must be positive")
        if self.volume < 0:
            raise ValueError("volume must be nonnegative")
        if self.low > min(self.open, self.close):
            raise ValueError(f"low {self.low} above open/close")
        if self.high < max(self.open, self.close):
            raise ValueError(f"high {self.high} below open/close")

    def value(self, field_name: str) -> float:
        """The selected scalar as a float."""
        if field_name not in FIELDS:
            raise ValueError(f"unknown field {field_name!r}; expected one of {FIELDS}")
        return float(getattr(self, field_name))


@dataclass(frozen=True)
class SeriesWindow:
    """An ordered run of bars plus the scalar series extracted from them.

    ``values[i]`` is exactly ``bars[i].value(field)``.  Windows may also be
    built from raw values (no bars) for synthetic series; operations that
    need OHLC data raise :class:`MissingOhlc` on those.
    """

    values: tuple[float, ...]
    field: str = "close"
    bars: tuple[OhlcBar, ...] | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.bars is not None:
            if len(self.bars) != len(self.values):
                raise ValueError("bars and values must have equal length")
            for a, b in zip(self.bars, self.bars[1:]):
                if a.date >= b.date:
                    raise ValueError("bar dates must be strictly increasing")

    @classmethod
    def from_bars(cls, bars: Sequence[OhlcBar], field_name: str = "close", label: str = "") -> "SeriesWindow":
        bars = tuple(bars)
        return cls(
            values=tuple(b.value(field_name) for b in bars),
            field=field_name,
            bars=bars,
            label=label,
        )

    @classmethod
    def from_values(cls, values: Iterable[float], field_name: str = "close", label: str = "") -> "SeriesWindow":
        """A bar-less window over a raw scalar series."""
        return cls(values=tuple(float(v) for v in values), field=field_name, bars=None, label=label)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def start_date(self) -> date:
        return self.require_bars()[0].date

    @property
    def end_date(self) -> date:
        return self.require_bars()[-1].date

    def require_bars(self) -> tuple[OhlcBar, ...]:
        if self.bars is None:
            raise MissingOhlc(f"window {self.label or self.values[:3]} has no OHLC bars")
        return self.bars


@dataclass(frozen=True)
class WindowSpec:
    """How to slice a bar sequence into windows.

    ``range`` mode selects every bar with ``start <= date <= end`` into one
    window; ``size`` mode sweeps fixed-length windows forward by ``stride``,
    dropping any trailing partial window.
    """

    mode: Literal["range", "size"]
    start: date | None = None
    end: date | None = None
    size: int | None = None
    stride: int = 1

    def __post_init__(self) -> None:
        if self.mode == "range":
            if self.start is None or self.end is None:
                raise ValueError("range mode needs start and end dates")
            if self.start > self.end:
                raise ValueError("start date after end date")
        elif self.mode == "size":
            if self.size is None or self.size < 2:
                raise ValueError("size must be at least 2")
            if self.stride < 1:
                raise ValueError("stride must be at least 1")
        else:
            raise ValueError(f"unknown window mode {self.mode!r}")

    @classmethod
    def date_range(cls, start: date, end: date) -> "WindowSpec":
        return cls(mode="range", start=start, end=end)

    @classmethod
    def fixed_size(cls, size: int, stride: int = 1) -> "WindowSpec":
        return cls(mode="size", size=size, stride=stride)


def parse_date(text: str) -> date:
    """Accept ISO 8601 (2019-12-03) or US style (12/3/2019)."""
    text = text.strip()
    try:
        return date.fromisoformat(text)
    except ValueError:
        pass
    try:
        return datetime.strptime(text, "%m/%d/%Y").date()
    except ValueError:
        raise ValueError(f"unparseable date {text!r}") from None


def _decimal(text: str, quantum: Decimal) -> Decimal:
    try:
        return Decimal(text.strip()).quantize(quantum)
    except InvalidOperation:
        raise ValueError(f"non-numeric price {text!r}") from None


def parse_csv(text: str | Iterable[str]) -> list[OhlcBar]:
    """Parse OHLCV CSV text into bars sorted ascending by date.

    The header must contain Date, Open, High, Low, Close, Volume and
    Adj Close in any order (case-insensitive, whitespace-trimmed).
    Raises :class:`MissingColumn`, :class:`MalformedRow` (with the
    offending data row number) or :class:`DuplicateDate`.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumn("empty input: no header row") from None

    positions: dict[str, int] = {}
    for idx, name in enumerate(header):
        key = " ".join(name.split()).lower()
        if key in _COLUMNS:
            positions[_COLUMNS[key]] = idx
    missing = [c for c in _COLUMNS.values() if c not in positions]
    if missing:
        raise MissingColumn(f"missing columns: {', '.join(sorted(missing))}")

    bars: list[OhlcBar] = []
    seen: set[date] = set()
    for row_no, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        try:
            cell = lambda name: row[positions[name]]
            d = parse_date(cell("date"))
            bar = OhlcBar(
                date=d,
                open=_decimal(cell("open"), _CENT),
                high=_decimal(cell("high"), _CENT),
                low=_decimal(cell("low"), _CENT),
                close=_decimal(cell("close"), _CENT),
                volume=int(cell("volume").strip()),
                adj_close=_decimal(cell("adj_close"), _MICRO),
            )
        except (ValueError, IndexError) as exc:
            raise MalformedRow(row_no, str(exc)) from None
        if bar.date in seen:
            raise DuplicateDate(f"duplicate date {bar.date.isoformat()} at row {row_no}")
        seen.add(bar.date)
        bars.append(bar)

    bars.sort(key=lambda b: b.date)
    return bars


def bars_to_csv(bars: Sequence[OhlcBar]) -> str:
    """Serialise bars back to CSV at stored precision (round-trips with parse_csv)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["Date", "Open", "High", "Low", "Close", "Volume", "Adj Close"])
    for b in bars:
        writer.writerow(
            [b.date.isoformat(), str(b.open), str(b.high), str(b.low), str(b.close), b.volume, str(b.adj_close)]
        )
    return out.getvalue()


def make_windows(bars: Sequence[OhlcBar], spec: WindowSpec, field_name: str = "close", label: str = "") -> list[SeriesWindow]:
    """Slice sorted bars into windows according to ``spec``.

    Range mode returns exactly one window; size mode returns every maximal
    window of ``spec.size`` bars with starts ``0, stride, 2*stride, ...``.
    """
    if not bars:
        raise EmptyWindow("no bars to window")
    if spec.mode == "range":
        selected = [b for b in bars if spec.start <= b.date <= spec.end]
        if len(selected) < 2:
            raise EmptyWindow(
                f"range {spec.start}..{spec.end} selects {len(selected)} bar(s); need at least 2"
            )
        return [SeriesWindow.from_bars(selected, field_name, label)]

    size = spec.size or 0
    if size > len(bars):
        raise SizeExceedsData(f"window size {size} exceeds {len(bars)} available bars")
    windows = []
    for start in range(0, len(bars) - size + 1, spec.stride):
        windows.append(SeriesWindow.from_bars(bars[start : start + size], field_name, label))
    return windows


def series_extrema(window: SeriesWindow) -> tuple[float, float]:
    """(min, max) over the window's extracted values."""
    if window.n == 0:
        raise EmptyWindow("cannot take extrema of an empty window")
    return (min(window.values), max(window.values))
