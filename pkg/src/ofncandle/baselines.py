"""Prior window-to-OFN constructions and the classical candlestick.

Two baselines accompany the average-core builder:

* the mass-balanced candlestick (``mb``): the support is anchored one
  standard deviation beyond the window extreme on the up side, and the
  down-side anchor is placed so the two branch areas stand in the same
  ratio as the observation masses above/below the core;
* the endpoint translation (``piasecki``): support from the first/last
  series values, core from the first bar's open and last bar's close.
  This one can produce a core that sticks out of the support, flagged
  ``proper=False``.

Both return :class:`OrderedPairTrapezoid`, a pair of affine branches kept
in traversal order, convertible to :class:`TrapezoidalOFN` for membership
and statistics.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Literal

import numpy as np

from .averages import EXPONENTIAL, SIMPLE, WeightScheme, std_dev, weighted_average
from .errors import TooFewPoints
from .ingest import SeriesWindow
from .ofn import BranchLine, Orientation, TrapezoidalOFN

__all__ = [
    "MassStats",
    "CandlestickSummary",
    "OrderedPairTrapezoid",
    "mass_stats",
    "build_mb_ofn",
    "build_piasecki_ofn",
    "japanese_candlestick",
]


@dataclass(frozen=True, slots=True)
class MassStats:
    """Guarded observation masses at or beyond the core endpoints.

    ``above`` sums the values >= the upper core endpoint, ``below`` the
    values <= the lower one; the +1 guard keeps both strictly positive.
    """

    above: float
    below: float

    def __post_init__(self) -> None:
        if self.above < 1.0 or self.below < 1.0:
            raise ValueError("masses include a +1 guard and cannot drop below 1")


@dataclass(frozen=True, slots=True)
class CandlestickSummary:
    """Classical open/close/high/low summary of a window."""

    open: Decimal
    close: Decimal
    high: Decimal
    low: Decimal
    color: Literal["green", "red"]


@dataclass(frozen=True)
class OrderedPairTrapezoid:
    """Two affine branches stored by their grade-0 and grade-1 values.

    ``up_start``/``up_end`` are the up branch at grades 0 and 1,
    ``down_start``/``down_end`` likewise for the down branch.  No nesting
    is required; ``proper`` says whether the core fits inside the support.
    """

    up_start: float
    up_end: float
    down_start: float
    down_end: float

    @property
    def proper(self) -> bool:
        lo, hi = sorted((self.up_start, self.down_start))
        c_lo, c_hi = sorted((self.up_end, self.down_end))
        return lo <= c_lo <= c_hi <= hi

    @property
    def orientation(self) -> Orientation:
        return Orientation.LONG if self.up_start <= self.down_start else Orientation.SHORT

    @property
    def up_branch(self) -> BranchLine:
        return BranchLine(self.up_start, self.up_end - self.up_start)

    @property
    def down_branch(self) -> BranchLine:
        return BranchLine(self.down_start, self.down_end - self.down_start)

    def as_trapezoid(self) -> TrapezoidalOFN:
        """Reinterpret the branch endpoints as a trapezoid, keeping direction."""
        if self.orientation is Orientation.LONG:
            endpoints = (self.up_start, self.up_end, self.down_end, self.down_start)
        else:
            endpoints = (self.down_start, self.down_end, self.up_end, self.up_start)
        return TrapezoidalOFN(*endpoints, orientation=self.orientation, proper=self.proper)


def mass_stats(window: SeriesWindow, s1: float, s2: float) -> MassStats:
    """Masses of the observations at or beyond the core endpoints (weak inequalities)."""
    if s1 > s2:
        raise ValueError(f"core endpoints out of order: {s1} > {s2}")
    x = np.asarray(window.values, dtype=float)
    return MassStats(
        above=1.0 + float(x[x >= s2].sum()),
        below=1.0 + float(x[x <= s1].sum()),
    )


def build_mb_ofn(
    window: SeriesWindow,
    s1_scheme: WeightScheme = SIMPLE,
    s2_scheme: WeightScheme = EXPONENTIAL,
) -> OrderedPairTrapezoid:
    """Mass-balanced candlestick OFN of a window.

    The core is the ordered pair of the two schemes' averages.  Long
    windows anchor the up branch at min - sigma and scale the down-side
    spread by the (above/below) mass ratio so the branch areas balance
    the masses; short windows mirror this from max + sigma with the
    inverse ratio.
    """
    if window.n < 2:
        raise TooFewPoints("mass-balanced build needs at least 2 values (sigma)")
    x = np.asarray(window.values, dtype=float)
    avg_a = weighted_average(x, s1_scheme)
    avg_b = weighted_average(x, s2_scheme)
    s1, s2 = min(avg_a, avg_b), max(avg_a, avg_b)
    sigma = std_dev(x)
    masses = mass_stats(window, s1, s2)

    if window.values[0] <= window.values[-1]:
        up_start = float(x.min()) - sigma
        down_start = (masses.above / masses.below) * (s1 - up_start) + s2
        return OrderedPairTrapezoid(up_start=up_start, up_end=s1, down_start=down_start, down_end=s2)

    up_start = float(x.max()) + sigma
    down_start = (masses.below / masses.above) * (s2 - up_start) + s1
    return OrderedPairTrapezoid(up_start=up_start, up_end=s2, down_start=down_start, down_end=s1)


def build_piasecki_ofn(window: SeriesWindow) -> OrderedPairTrapezoid:
    """Endpoint-translation OFN: support from the first/last series values,
    core from the first bar's open and the last bar's close.

    The output may be improper (core outside the support); check ``proper``
    before asking for membership or statistics.
    """
    bars = window.require_bars()
    if window.n < 2:
        raise TooFewPoints("endpoint translation needs at least 2 values")
    x_first, x_last = window.values[0], window.values[-1]
    x_open, x_close = float(bars[0].open), float(bars[-1].close)

    support = (min(x_first, x_last), max(x_first, x_last))
    core = (min(x_open, x_close), max(x_open, x_close))
    if x_first <= x_last:
        return OrderedPairTrapezoid(
            up_start=support[0], up_end=core[0], down_start=support[1], down_end=core[1]
        )
    return OrderedPairTrapezoid(
        up_start=support[1], up_end=core[1], down_start=support[0], down_end=core[0]
    )


def japanese_candlestick(window: SeriesWindow) -> CandlestickSummary:
    """Classical candlestick of a window: first open, last close, extreme
    high/low, green when close >= open (ties count as green)."""
    bars = window.require_bars()
    open_, close = bars[0].open, bars[-1].close
    return CandlestickSummary(
        open=open_,
        close=close,
        high=max(b.high for b in bars),
        low=min(b.low for b in bars),
        color="green" if close >= open_ else "red",
    )
