"""Exception types shared across the library.

Everything derives from :class:`OfnError` so callers can catch data and
shape problems with a single except clause while argparse/usage errors
stay separate.
"""

from __future__ import annotations

__all__ = [
    "OfnError",
    "MalformedRow",
    "MissingColumn",
    "DuplicateDate",
    "EmptyWindow",
    "SizeExceedsData",
    "EmptySeries",
    "BadGamma",
    "TooFewPoints",
    "ImproperShape",
    "AlphaOutOfRange",
    "MissingOhlc",
]


class OfnError(ValueError):
    """Base class for all data and shape errors raised by this package."""


class MalformedRow(OfnError):
    """A CSV row could not be parsed (non-numeric price, bad date, broken OHLC)."""

    def __init__(self, row: int, reason: str):
        self.row = row
        self.reason = reason
        super().__init__(f"row {row}: {reason}")


class MissingColumn(OfnError):
    """The CSV header lacks one of the required columns."""


class DuplicateDate(OfnError):
    """Two rows carry the same date."""


class EmptyWindow(OfnError):
    """A window selection produced fewer than two observations."""


class SizeExceedsData(OfnError):
    """A fixed-size window is larger than the available data."""


class EmptySeries(OfnError):
    """An average was requested over an empty series."""


class BadGamma(OfnError):
    """Exponential smoothing factor outside (0, 1)."""


class TooFewPoints(OfnError):
    """An operation needing at least two points got fewer."""


class ImproperShape(OfnError):
    """Membership, cuts, or statistics requested on a non-nested trapezoid."""


class AlphaOutOfRange(OfnError):
    """Membership grade outside [0, 1]."""


class MissingOhlc(OfnError):
    """The window carries no OHLC bars (built from raw values only)."""
