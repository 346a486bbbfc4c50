"""Descriptive statistics of a trapezoidal OFN.

All four statistics are functions of the endpoint geometry alone:

* ``total_area``      -- the trapezoid area, (support width + core width)/2
* ``total_imprecision`` -- the area outside the core, (sum of spreads)/2
* ``skew``            -- upper spread / lower spread (1 = symmetric,
                         None when only the lower spread vanishes)
* ``direction_strength`` -- core width / total area, the fraction of the
                         shape's area held at full membership

``summarize`` bundles them with the window's sigma and first/last values
into one record, mirroring the columns of the reference tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .averages import std_dev
from .errors import ImproperShape
from .ingest import SeriesWindow
from .ofn import TrapezoidalOFN

__all__ = [
    "OfnSummary",
    "total_area",
    "total_imprecision",
    "skew",
    "direction_strength",
    "summarize",
]


@dataclass(frozen=True, slots=True)
class OfnSummary:
    """One row of derived data: endpoints, dispersion, and shape statistics.

    ``skew`` is None for the degenerate shape with a flat lower spread and
    a positive upper one, so batch reports never abort on it.
    """

    label: str
    a0_minus: float
    a0_plus: float
    s1: float
    s2: float
    sigma: float
    first_value: float
    last_value: float
    skew: float | None
    imprecision: float
    direction_strength: float
    area: float


def _require_proper(ofn: TrapezoidalOFN) -> None:
    if not ofn.proper:
        raise ImproperShape("statistics are defined for proper trapezoids only")


def total_area(ofn: TrapezoidalOFN) -> float:
    """Area between the two branches: ((a0+ - a0-) + (a1+ - a1-)) / 2."""
    _require_proper(ofn)
    return 0.5 * ((ofn.a0_plus - ofn.a0_minus) + (ofn.a1_plus - ofn.a1_minus))


def total_imprecision(ofn: TrapezoidalOFN) -> float:
    """Area outside the core: half the sum of the two spreads."""
    _require_proper(ofn)
    return 0.5 * (ofn.upper_spread + ofn.lower_spread)


def skew(ofn: TrapezoidalOFN) -> float | None:
    """Upper spread over lower spread.

    Both spreads zero -> 1.0 (perfectly symmetric degenerate); lower spread
    zero with a positive upper spread -> None (undefined, not an error).
    """
    _require_proper(ofn)
    upper, lower = ofn.upper_spread, ofn.lower_spread
    if lower == 0.0:
        return 1.0 if upper == 0.0 else None
    return upper / lower


def direction_strength(ofn: TrapezoidalOFN) -> float:
    """Core width as a fraction of total area; a zero-area point counts as 1."""
    _require_proper(ofn)
    area = total_area(ofn)
    if area == 0.0:
        return 1.0
    return ofn.core_width / area


def summarize(window: SeriesWindow, ofn: TrapezoidalOFN, label: str | None = None) -> OfnSummary:
    """Assemble the full statistics row for an OFN built from ``window``."""
    _require_proper(ofn)
    return OfnSummary(
        label=window.label if label is None else label,
        a0_minus=ofn.a0_minus,
        a0_plus=ofn.a0_plus,
        s1=ofn.a1_minus,
        s2=ofn.a1_plus,
        sigma=std_dev(window.values),
        first_value=window.values[0],
        last_value=window.values[-1],
        skew=skew(ofn),
        imprecision=total_imprecision(ofn),
        direction_strength=direction_strength(ofn),
        area=total_area(ofn),
    )
