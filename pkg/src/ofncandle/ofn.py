"""Trapezoidal ordered fuzzy numbers and the average-core construction.

A trapezoidal OFN is four ordered endpoints plus an orientation.  The core
[a1_minus, a1_plus] comes from two window averages (plain and weighted);
the support endpoints are the means of the observations lying strictly
below / above the core.  Orientation is long when the window ends at or
above where it started, short otherwise; it decides which affine branch a
particle traverses upward (grade 0 -> 1) and which downward.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .averages import EXPONENTIAL, WeightScheme, simple_average, weighted_average
from .errors import AlphaOutOfRange, EmptyWindow, ImproperShape
from .ingest import SeriesWindow

__all__ = ["Orientation", "BranchLine", "TrapezoidalOFN", "orientation_of", "build_ofn"]


class Orientation(enum.Enum):
    LONG = "long"
    SHORT = "short"


@dataclass(frozen=True, slots=True)
class BranchLine:
    """One affine branch: value = intercept + grade * slope."""

    intercept: float
    slope: float

    def at(self, alpha: float) -> float:
        if not 0.0 <= alpha <= 1.0:
            raise AlphaOutOfRange(f"alpha must be in [0, 1], got {alpha}")
        # alpha 0/1 reproduce the endpoints exactly: x + 0.0 == x, 1.0 * s == s
        return self.intercept + alpha * self.slope


@dataclass(frozen=True)
class TrapezoidalOFN:
    """Four endpoints a0_minus <= a1_minus <= a1_plus <= a0_plus plus direction.

    ``proper`` is False for shapes whose core is not nested in the support
    (the endpoint-translation builder can produce those); improper shapes
    refuse membership, cuts and statistics.
    """

    a0_minus: float
    a1_minus: float
    a1_plus: float
    a0_plus: float
    orientation: Orientation = Orientation.LONG
    proper: bool = True

    def __post_init__(self) -> None:
        if self.proper and not (self.a0_minus <= self.a1_minus <= self.a1_plus <= self.a0_plus):
            raise ImproperShape(
                "endpoints must be ordered a0- <= a1- <= a1+ <= a0+: "
                f"({self.a0_minus}, {self.a1_minus}, {self.a1_plus}, {self.a0_plus})"
            )

    # -- geometry --------------------------------------------------------

    @property
    def support(self) -> tuple[float, float]:
        return (self.a0_minus, self.a0_plus)

    @property
    def core(self) -> tuple[float, float]:
        return (self.a1_minus, self.a1_plus)

    @property
    def core_width(self) -> float:
        return self.a1_plus - self.a1_minus

    @property
    def lower_spread(self) -> float:
        return self.a1_minus - self.a0_minus

    @property
    def upper_spread(self) -> float:
        return self.a0_plus - self.a1_plus

    # -- branches ---------------------------------------------------------

    @property
    def up_branch(self) -> BranchLine:
        """The branch traversed from grade 0 up to grade 1."""
        if self.orientation is Orientation.LONG:
            return BranchLine(self.a0_minus, self.a1_minus - self.a0_minus)
        return BranchLine(self.a0_plus, self.a1_plus - self.a0_plus)

    @property
    def down_branch(self) -> BranchLine:
        """The branch traversed from grade 1 back down to grade 0."""
        if self.orientation is Orientation.LONG:
            return BranchLine(self.a0_plus, self.a1_plus - self.a0_plus)
        return BranchLine(self.a0_minus, self.a1_minus - self.a0_minus)

    def branch_at(self, which: Literal["up", "down"], alpha: float) -> float:
        if which == "up":
            return self.up_branch.at(alpha)
        if which == "down":
            return self.down_branch.at(alpha)
        raise ValueError(f"branch must be 'up' or 'down', got {which!r}")

    # -- membership -------------------------------------------------------

    def membership(self, x: float) -> float:
        """Piecewise-linear membership grade of ``x``.

        Open boundaries are zero (u(a0_minus) = u(a0_plus) = 0 when the
        spread is positive); zero-width spreads behave as step edges.
        """
        self._require_proper()
        if x < self.a0_minus or x > self.a0_plus:
            return 0.0
        if self.a1_minus <= x <= self.a1_plus:
            return 1.0
        if x < self.a1_minus:
            return (x - self.a0_minus) / (self.a1_minus - self.a0_minus)
        return (self.a0_plus - x) / (self.a0_plus - self.a1_plus)

    def alpha_cut(self, alpha: float) -> tuple[float, float]:
        """The level set at grade ``alpha``, as an ascending interval."""
        self._require_proper()
        if not 0.0 <= alpha <= 1.0:
            raise AlphaOutOfRange(f"alpha must be in [0, 1], got {alpha}")
        lo = BranchLine(self.a0_minus, self.a1_minus - self.a0_minus).at(alpha)
        hi = BranchLine(self.a0_plus, self.a1_plus - self.a0_plus).at(alpha)
        return (lo, hi) if lo <= hi else (hi, lo)

    def _require_proper(self) -> None:
        if not self.proper:
            raise ImproperShape("operation requires a proper (nested) trapezoid")


def orientation_of(window: SeriesWindow | Sequence[float]) -> Orientation:
    """Long when the series ends at or above its first value, short otherwise."""
    values = window.values if isinstance(window, SeriesWindow) else tuple(window)
    if len(values) < 2:
        raise EmptyWindow("orientation needs at least 2 values")
    return Orientation.LONG if values[0] <= values[-1] else Orientation.SHORT


def build_ofn(window: SeriesWindow, scheme: WeightScheme = EXPONENTIAL) -> TrapezoidalOFN:
    """Build the average-core trapezoidal OFN of a window.

    Core endpoints are min/max of the simple and weighted averages; each
    support endpoint is the mean of the observations strictly outside the
    core on its side.  When no observation falls outside on a side the
    spread collapses to zero rather than erroring.
    """
    if window.n < 2:
        raise EmptyWindow("OFN construction needs at least 2 values")
    x = np.asarray(window.values, dtype=float)
    sa = simple_average(x)
    wa = weighted_average(x, scheme)
    s1, s2 = (sa, wa) if sa <= wa else (wa, sa)

    below = x[x < s1]
    above = x[x > s2]
    # min/max guard absorbs rounding when the outside values hug the core
    a0_minus = min(float(below.mean()), s1) if below.size else s1
    a0_plus = max(float(above.mean()), s2) if above.size else s2

    return TrapezoidalOFN(
        a0_minus=a0_minus,
        a1_minus=s1,
        a1_plus=s2,
        a0_plus=a0_plus,
        orientation=orientation_of(window),
    )
