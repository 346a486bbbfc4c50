from __future__ import annotations

import random
from datetime import date
from decimal import Decimal

import pytest

from ofncandle import (
    DuplicateDate,
    EmptyWindow,
    MalformedRow,
    MissingColumn,
    MissingOhlc,
    OhlcBar,
    SeriesWindow,
    SizeExceedsData,
    WindowSpec,
    bars_to_csv,
    make_windows,
    parse_csv,
    series_extrema,
)

from conftest import bars_from_closes

HEADER = "Date,Open,High,Low,Close,Volume,Adj Close\n"

ROWS_5 = (
    "2019-12-03,336.00,340.00,330.00,336.20,1000,336.200000\n"
    "2019-12-04,336.20,338.00,332.00,333.03,1100,333.030000\n"
    "2019-12-05,333.03,335.50,329.00,330.37,1200,330.370000\n"
    "2019-12-06,330.37,340.00,330.00,335.89,1300,335.890000\n"
    "2019-12-09,335.89,342.00,335.00,339.53,1400,339.530000\n"
)


def test_parse_single_row():
    bars = parse_csv(HEADER + "2019-12-03,336.00,340.00,330.00,336.20,1000,336.200000\n")
    assert len(bars) == 1
    b = bars[0]
    assert b.date == date(2019, 12, 3)
    assert b.close == Decimal("336.20")
    assert b.volume == 1000
    assert b.adj_close == Decimal("336.200000")


def test_parse_header_only_gives_empty_list():
    assert parse_csv(HEADER) == []


def test_rows_sorted_ascending_by_date():
    lines = (HEADER + ROWS_5).splitlines(keepends=True)
    shuffled = [lines[0]] + random.Random(7).sample(lines[1:], k=5)
    bars = parse_csv("".join(shuffled))
    # oracle: sort a straight parse of the in-order fixture
    expected = sorted(parse_csv(HEADER + ROWS_5), key=lambda b: b.date)
    assert bars == expected
    assert [b.date for b in bars] == sorted(b.date for b in bars)


def test_header_matched_case_insensitively_and_any_order():
    text = (
        "adj close, VOLUME ,Close,LOW,high,OPEN,date\n"
        "10.100000,50,10.10,9.90,10.30,10.00,2020-01-02\n"
    )
    (b,) = parse_csv(text)
    assert b.open == Decimal("10.00") and b.adj_close == Decimal("10.100000")


def test_us_date_format_accepted():
    (b,) = parse_csv(HEADER + "12/3/2019,336.00,340.00,330.00,336.20,1000,336.200000\n")
    assert b.date == date(2019, 12, 3)


def test_quoted_fields():
    (b,) = parse_csv(HEADER.replace("Adj Close", '"Adj Close"') +
                     '"2019-12-03","336.00",340.00,330.00,"336.20",1000,336.200000\n')
    assert b.close == Decimal("336.20")


def test_duplicate_date_rejected():
    text = HEADER + (
        "2019-12-03,336.00,340.00,330.00,336.20,1000,336.200000\n"
        "2019-12-03,336.20,338.00,332.00,333.03,1100,333.030000\n"
    )
    with pytest.raises(DuplicateDate):
        parse_csv(text)


def test_missing_column():
    with pytest.raises(MissingColumn):
        parse_csv("Date,Open,High,Low,Close,Volume\n")


@pytest.mark.parametrize(
    "row",
    [
        "2019-12-03,abc,340.00,330.00,336.20,1000,336.200000",  # non-numeric price
        "not-a-date,336.00,340.00,330.00,336.20,1000,336.200000",  # bad date
        "2019-12-03,336.00,335.00,330.00,336.20,1000,336.200000",  # high < open
        "2019-12-03,336.00,340.00,337.00,336.20,1000,336.200000",  # low > close
        "2019-12-03,336.00,340.00,330.00,336.20,-5,336.200000",  # negative volume
        "2019-12-03,336.00,340.00,330.00",  # short row
    ],
)
def test_malformed_rows(row):
    with pytest.raises(MalformedRow) as err:
        parse_csv(HEADER + row + "\n")
    assert err.value.row == 1


def test_round_trip_preserves_bars():
    bars = parse_csv(HEADER + ROWS_5)
    assert parse_csv(bars_to_csv(bars)) == bars


def test_range_window_selects_inclusive_dates():
    bars = parse_csv(HEADER + ROWS_5)
    spec = WindowSpec.date_range(date(2019, 12, 4), date(2019, 12, 6))
    (w,) = make_windows(bars, spec, "close")
    assert w.n == 3
    assert w.start_date == date(2019, 12, 4) and w.end_date == date(2019, 12, 6)


def test_range_window_too_small():
    bars = parse_csv(HEADER + ROWS_5)
    with pytest.raises(EmptyWindow):
        make_windows(bars, WindowSpec.date_range(date(2019, 12, 3), date(2019, 12, 3)), "close")


def test_size_window_equal_to_data():
    bars = bars_from_closes([1, 2, 3, 4, 5])
    windows = make_windows(bars, WindowSpec.fixed_size(5), "close")
    assert len(windows) == 1 and windows[0].n == 5


def test_size_windows_enumerate_all_slices():
    closes = [10, 11, 12, 13, 14, 15, 16]
    bars = bars_from_closes(closes)
    windows = make_windows(bars, WindowSpec.fixed_size(5, stride=1), "close")
    # oracle: every length-5 contiguous slice
    expected = [tuple(float(c) for c in closes[i : i + 5]) for i in range(3)]
    assert [w.values for w in windows] == expected


def test_size_exceeds_data():
    bars = bars_from_closes([1, 2, 3])
    with pytest.raises(SizeExceedsData):
        make_windows(bars, WindowSpec.fixed_size(5), "close")


def test_stride_spacing_and_constant_length():
    bars = bars_from_closes(range(1, 12))
    windows = make_windows(bars, WindowSpec.fixed_size(4, stride=3), "close")
    assert all(w.n == 4 for w in windows)
    starts = [w.values[0] for w in windows]
    assert starts == [1.0, 4.0, 7.0]


def test_values_match_bars_exactly():
    bars = bars_from_closes([336.20, 333.03, 330.37])
    for field in ("open", "high", "low", "close", "adj_close"):
        w = SeriesWindow.from_bars(bars, field)
        assert w.values == tuple(b.value(field) for b in bars)
        assert w.values[0] == bars[0].value(field)
        assert w.values[-1] == bars[-1].value(field)


def test_window_spec_validation():
    with pytest.raises(ValueError):
        WindowSpec.date_range(date(2020, 1, 2), date(2020, 1, 1))
    with pytest.raises(ValueError):
        WindowSpec.fixed_size(1)
    with pytest.raises(ValueError):
        WindowSpec.fixed_size(5, stride=0)


def test_series_extrema():
    assert series_extrema(SeriesWindow.from_values([1, 2, 3, 4, 5])) == (1.0, 5.0)
    assert series_extrema(SeriesWindow.from_values([7, 7, 7])) == (7.0, 7.0)


def test_series_extrema_matches_linear_scan_of_fixture(fixtures_dir):
    text = (fixtures_dir / "tsla.csv").read_text()
    bars = parse_csv(text)
    spec = WindowSpec.date_range(date(2019, 12, 3), date(2019, 12, 31))
    (w,) = make_windows(bars, spec, "close")
    lo, hi = series_extrema(w)
    closes = [float(b.close) for b in bars if date(2019, 12, 3) <= b.date <= date(2019, 12, 31)]
    assert lo == min(closes) and hi == max(closes)
    assert w.values[0] == 336.20  # the window opens on the reference first value


def test_bar_invariants_enforced():
    with pytest.raises(ValueError):
        OhlcBar(date(2020, 1, 1), Decimal("10"), Decimal("9"), Decimal("8"), Decimal("9.5"),
                100, Decimal("9.500000"))


def test_windows_without_bars_refuse_ohlc_operations():
    w = SeriesWindow.from_values([1, 2, 3])
    with pytest.raises(MissingOhlc):
        w.require_bars()
