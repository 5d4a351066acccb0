"""
Public API for the citation_cli package.
Exposes the `p100` command line application and the report builders behind it.
"""

from .cli import app
from .config import CliSettings, load_settings
from .logging_config import configure_logging
from .plotdata import PlotDataFactory, PlotMode, format_plot_data, plot_points
from .reporting import (
    ReportTable,
    YearComparison,
    build_report_table,
    compare_reference_sets,
    expand_report_records,
    read_report_records,
    render_comparison,
    render_diff,
    render_report_table,
    render_top,
    report_records,
    write_report_records,
)

__all__ = [
    "CliSettings",
    "PlotDataFactory",
    "PlotMode",
    "ReportTable",
    "YearComparison",
    "app",
    "build_report_table",
    "compare_reference_sets",
    "configure_logging",
    "expand_report_records",
    "format_plot_data",
    "load_settings",
    "plot_points",
    "read_report_records",
    "render_comparison",
    "render_diff",
    "render_report_table",
    "render_top",
    "report_records",
    "write_report_records",
]
