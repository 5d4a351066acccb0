from collections.abc import Callable
from enum import StrEnum
from fractions import Fraction

from citation_core.models import ReferenceSet, UniqueCountTable
from citation_indicators.display import format_fraction
from citation_indicators.indicators import build_unique_table, p100
from citation_indicators.models import DegeneratePolicy

type PlotPoint = tuple[int | Fraction, int]


class PlotMode(StrEnum):
    BY_CITATION_COUNT = "by-citation-count"
    BY_UNIQUE_COUNT = "by-unique-count"
    BY_P100 = "by-p100"


def _by_citation_count(table: UniqueCountTable, max_citations: int | None, policy: DegeneratePolicy) -> list[PlotPoint]:
    # every count from 0 on, including those no paper holds
    upper = table.max_count if max_citations is None else min(max_citations, table.max_count)
    return [(citations, entry.papers if (entry := table.entry_for(citations)) else 0) for citations in range(upper + 1)]


def _by_unique_count(table: UniqueCountTable, max_citations: int | None, policy: DegeneratePolicy) -> list[PlotPoint]:
    return [(entry.citations, entry.papers) for entry in table.entries if max_citations is None or entry.citations <= max_citations]


def _by_p100(table: UniqueCountTable, max_citations: int | None, policy: DegeneratePolicy) -> list[PlotPoint]:
    return [(p100(entry.citations, table, policy).value, entry.papers) for entry in table.entries if max_citations is None or entry.citations <= max_citations]


class PlotDataFactory:
    def __init__(self):
        self._plotters: dict[PlotMode, Callable[[UniqueCountTable, int | None, DegeneratePolicy], list[PlotPoint]]] = {
            PlotMode.BY_CITATION_COUNT: _by_citation_count,
            PlotMode.BY_UNIQUE_COUNT: _by_unique_count,
            PlotMode.BY_P100: _by_p100,
        }

    def create(self, mode: PlotMode | str) -> Callable[[UniqueCountTable, int | None, DegeneratePolicy], list[PlotPoint]]:
        plotter = self._plotters.get(mode)
        if not plotter:
            raise ValueError(f"Unknown plot mode: {mode}")
        return plotter


def plot_points(reference_set: ReferenceSet, mode: PlotMode | str, max_citations: int | None = None, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> list[PlotPoint]:
    """Two-column data: papers per citation count, per ranked count, or per P100 value."""
    return PlotDataFactory().create(mode)(build_unique_table(reference_set), max_citations, policy)


def format_plot_data(points: list[PlotPoint], mode: PlotMode | str, precision: int = 1, label: str = "") -> str:
    x_name = "P100" if mode == PlotMode.BY_P100 else "citations"
    header = f"# {label + ': ' if label else ''}{x_name}\tpapers\n"
    return header + "".join(f"{format_fraction(x, precision) if mode == PlotMode.BY_P100 else x}\t{papers}\n" for x, papers in points)
