"""ofncandle: trapezoidal ordered fuzzy numbers from windowed time series.

Typical use::

    from ofncandle import parse_csv, make_windows, WindowSpec, build_ofn, summarize

    bars = parse_csv(open("prices.csv").read())
    spec = WindowSpec.date_range(date(2019, 12, 3), date(2019, 12, 31))
    (window,) = make_windows(bars, spec, "close", label="TSLA")
    ofn = build_ofn(window)          # exponential-weighted core by default
    row = summarize(window, ofn)
"""

from .averages import (
    EXPONENTIAL,
    LINEAR,
    SIMPLE,
    WeightScheme,
    exponential_average,
    linear_weighted_average,
    scheme_from_name,
    simple_average,
    std_dev,
    weighted_average,
)
from .baselines import (
    CandlestickSummary,
    MassStats,
    OrderedPairTrapezoid,
    build_mb_ofn,
    build_piasecki_ofn,
    japanese_candlestick,
    mass_stats,
)
from .errors import (
    AlphaOutOfRange,
    BadGamma,
    DuplicateDate,
    EmptySeries,
    EmptyWindow,
    ImproperShape,
    MalformedRow,
    MissingColumn,
    MissingOhlc,
    OfnError,
    SizeExceedsData,
    TooFewPoints,
)
from .ingest import (
    OhlcBar,
    SeriesWindow,
    WindowSpec,
    bars_to_csv,
    make_windows,
    parse_csv,
    series_extrema,
)
from .ofn import BranchLine, Orientation, TrapezoidalOFN, build_ofn, orientation_of
from .report import (
    OfnRecord,
    RunConfig,
    build_records,
    emit_csv,
    emit_json,
    emit_svg,
    emit_table,
    record_from_window,
)
from .stats import OfnSummary, direction_strength, skew, summarize, total_area, total_imprecision

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # ingest
    "OhlcBar",
    "SeriesWindow",
    "WindowSpec",
    "parse_csv",
    "bars_to_csv",
    "make_windows",
    "series_extrema",
    # averages
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
    # ofn
    "Orientation",
    "BranchLine",
    "TrapezoidalOFN",
    "orientation_of",
    "build_ofn",
    # baselines
    "MassStats",
    "CandlestickSummary",
    "OrderedPairTrapezoid",
    "mass_stats",
    "build_mb_ofn",
    "build_piasecki_ofn",
    "japanese_candlestick",
    # stats
    "OfnSummary",
    "total_area",
    "total_imprecision",
    "skew",
    "direction_strength",
    "summarize",
    # report
    "OfnRecord",
    "RunConfig",
    "record_from_window",
    "build_records",
    "emit_json",
    "emit_table",
    "emit_csv",
    "emit_svg",
    # errors
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
