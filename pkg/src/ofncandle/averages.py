"""Window averages and dispersion.

Three averages share one contract: a convex combination of the series with
nondecreasing weights.  ``simple`` weights everything equally, ``linear``
weights observation i by i, and ``exponential`` weights observation i by
(1-gamma)^(n-i) so the newest points dominate.  ``std_dev`` is the sample
standard deviation (n-1 divisor).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import BadGamma, EmptySeries, TooFewPoints

__all__ = [
    "WeightScheme",
    "SIMPLE",
    "LINEAR",
    "EXPONENTIAL",
    "scheme_from_name",
    "simple_average",
    "linear_weighted_average",
    "exponential_average",
    "weighted_average",
    "std_dev",
]

logger = logging.getLogger(__name__)

SchemeKind = Literal["simple", "linear", "exponential"]


@dataclass(frozen=True, slots=True)
class WeightScheme:
    """A named weighting rule with nondecreasing weights.

    For the exponential kind, ``gamma`` is the smoothing factor in (0, 1);
    leave it None to use the window-length default 2/(n+1).
    """

    kind: SchemeKind
    gamma: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("simple", "linear", "exponential"):
            raise ValueError(f"unknown scheme kind {self.kind!r}")
        if self.gamma is not None:
            if self.kind != "exponential":
                raise ValueError("gamma only applies to the exponential scheme")
            if not 0.0 < self.gamma < 1.0:
                raise BadGamma(f"gamma must be in (0, 1), got {self.gamma}")

    def effective_gamma(self, n: int) -> float:
        return self.gamma if self.gamma is not None else 2.0 / (n + 1)

    def weights(self, n: int) -> np.ndarray:
        """Unnormalised weights w_1 <= ... <= w_n for a length-n window."""
        if n < 1:
            raise EmptySeries("weights need n >= 1")
        if self.kind == "simple":
            return np.ones(n)
        if self.kind == "linear":
            return np.arange(1, n + 1, dtype=float)
        q = 1.0 - self.effective_gamma(n)
        return q ** np.arange(n - 1, -1, -1, dtype=float)


SIMPLE = WeightScheme("simple")
LINEAR = WeightScheme("linear")
EXPONENTIAL = WeightScheme("exponential")

_SCHEME_NAMES = {"sa": SIMPLE, "lwa": LINEAR, "ea": EXPONENTIAL}


def scheme_from_name(name: str) -> WeightScheme:
    """Map the CLI tokens sa / lwa / ea to schemes."""
    try:
        return _SCHEME_NAMES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown scheme {name!r}; expected sa, lwa or ea") from None


def _as_array(values: Sequence[float]) -> np.ndarray:
    x = np.asarray(values, dtype=float)
    if x.ndim != 1:
        raise ValueError("expected a one-dimensional series")
    if x.size == 0:
        raise EmptySeries("average of an empty series")
    return x


def simple_average(values: Sequence[float]) -> float:
    """Arithmetic mean."""
    return float(np.mean(_as_array(values)))


def linear_weighted_average(values: Sequence[float]) -> float:
    """Mean with weight i on the i-th observation: sum(i*x_i) / (n(n+1)/2)."""
    x = _as_array(values)
    return float(np.average(x, weights=np.arange(1, x.size + 1)))


def exponential_average(values: Sequence[float], gamma: float | None = None) -> float:
    """Mean with weight (1-gamma)^(n-i) on the i-th observation.

    Computed in the unnormalised form sum(w_i x_i) / sum(w_i), which avoids
    the cancellation the 1-(1-gamma)^n normalisation suffers for small gamma.
    """
    x = _as_array(values)
    g = 2.0 / (x.size + 1) if gamma is None else gamma
    if not 0.0 < g < 1.0:
        raise BadGamma(f"gamma must be in (0, 1), got {g}")
    w = (1.0 - g) ** np.arange(x.size - 1, -1, -1, dtype=float)
    return float(np.average(x, weights=w))


def weighted_average(values: Sequence[float], scheme: WeightScheme) -> float:
    """Dispatch to the scheme's average."""
    if scheme.kind == "simple":
        return simple_average(values)
    if scheme.kind == "linear":
        return linear_weighted_average(values)
    return exponential_average(values, scheme.gamma)


def std_dev(values: Sequence[float]) -> float:
    """Sample standard deviation (n-1 divisor)."""
    x = _as_array(values)
    if x.size < 2:
        raise TooFewPoints("std_dev needs at least 2 points")
    sample = float(np.std(x, ddof=1))
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(
            "std_dev n=%d sample=%.10g population=%.10g",
            x.size,
            sample,
            float(np.std(x, ddof=0)),
        )
    return sample
