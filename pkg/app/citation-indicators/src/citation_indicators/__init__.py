"""
Public API for the citation_indicators package.
Exposes the P100 citation-rank indicator and the percentile statistics computed alongside it.
"""

from .core import DegenerateTableError, IndicatorError, InvalidFractionError, PositionOutOfRangeError, UnknownAuthorError, UnrankedCountError
from .display import as_fraction, format_fraction
from .indicators import (
    build_unique_table,
    category_p100,
    in_percentile_class,
    mean_p100,
    multi_category_p100,
    p100,
    p100_all,
    p100_by_count,
    split_by_category,
)
from .models import ClassBoundary, CumulatedRow, DegeneratePolicy, TopFractionResult
from .percentiles import cumulated_percentages, hazen_percentile, hazen_percentiles, median_paper_citations, top_fraction

__all__ = [
    "ClassBoundary",
    "CumulatedRow",
    "DegeneratePolicy",
    "DegenerateTableError",
    "IndicatorError",
    "InvalidFractionError",
    "PositionOutOfRangeError",
    "TopFractionResult",
    "UnknownAuthorError",
    "UnrankedCountError",
    "as_fraction",
    "build_unique_table",
    "category_p100",
    "cumulated_percentages",
    "format_fraction",
    "hazen_percentile",
    "hazen_percentiles",
    "in_percentile_class",
    "mean_p100",
    "median_paper_citations",
    "multi_category_p100",
    "p100",
    "p100_all",
    "p100_by_count",
    "split_by_category",
    "top_fraction",
]
