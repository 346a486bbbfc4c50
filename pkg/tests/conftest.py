from __future__ import annotations

from datetime import date, timedelta
from decimal import Decimal
from pathlib import Path

import pytest

from ofncandle import OhlcBar

FIXTURES = Path(__file__).parent / "fixtures"


def bar(day: date, close: float, spread: float = 1.0, volume: int = 1000) -> OhlcBar:
    """A consistent bar around a close price, for synthetic windows."""
    c = Decimal(f"{close:.2f}")
    s = Decimal(f"{spread:.2f}")
    return OhlcBar(
        date=day,
        open=c,
        high=c + s,
        low=max(c - s, Decimal("0.01")),
        close=c,
        volume=volume,
        adj_close=c.quantize(Decimal("0.000001")),
    )


def bars_from_closes(closes, start=date(2020, 1, 1)) -> list[OhlcBar]:
    return [bar(start + timedelta(days=i), c) for i, c in enumerate(closes)]


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
