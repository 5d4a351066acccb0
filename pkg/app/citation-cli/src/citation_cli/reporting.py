import json
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

import structlog
from citation_core.models import IndicatorValue, ReferenceSet
from citation_generators.generators import reference_set_from_counts
from citation_indicators.display import format_fraction
from citation_indicators.indicators import build_unique_table, mean_p100, p100_by_count
from citation_indicators.models import DegeneratePolicy, TopFractionResult
from citation_indicators.percentiles import cumulated_percentages, top_fraction
from citation_perturbation.models import DiffReport, MechanismReport
from prettytable import PrettyTable
from pydantic import BaseModel, ConfigDict, Field

log = structlog.get_logger()


class ReportRow(BaseModel):
    """One citation count of a rank table; counts no paper holds have no rank and no P100."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    citation_count: int
    paper_count: int
    rank: int | None = None
    p100: Fraction | None = None
    cumulated_fraction: Fraction | None = None


class AuthorMean(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    author: str
    papers: int
    mean_p100: Fraction


class ReportTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str = Field(..., description="Label of the reported reference set.")
    papers: int = Field(..., description="Size of the reference set.")
    i_max: int = Field(..., description="Highest rank of the scale.")
    rows: tuple[ReportRow, ...]
    author_means: tuple[AuthorMean, ...] = ()
    show_cumulated: bool = False


class YearComparison(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    papers: int
    i_max: int
    top_count: int = Field(..., description="Highest citation count of the set.")
    threshold_citations: int
    threshold_p100: IndicatorValue | None = None
    flagged: bool = Field(default=False, description="The threshold P100 differs from the one of another row.")
    note: str = ""


def build_report_table(
    reference_set: ReferenceSet,
    policy: DegeneratePolicy = DegeneratePolicy.RAISE,
    show_cumulated: bool = False,
    show_author_means: bool = False,
    with_gaps: bool = False,
) -> ReportTable:
    table = build_unique_table(reference_set)
    values = p100_by_count(table, policy)
    cumulated = {row.citation_count: row.cumulated_fraction for row in cumulated_percentages(table, reference_set.size)} if show_cumulated else {}
    counts = range(table.min_count, table.max_count + 1) if with_gaps else table.citation_counts

    rows = []
    for citations in counts:
        entry = table.entry_for(citations)
        if entry is None:
            rows.append(ReportRow(citation_count=citations, paper_count=0))
            continue
        rows.append(
            ReportRow(
                citation_count=citations,
                paper_count=entry.papers,
                rank=entry.rank,
                p100=values[citations].value,
                cumulated_fraction=cumulated.get(citations),
            )
        )

    author_means = ()
    if show_author_means:
        author_means = tuple(
            AuthorMean(author=author, papers=len(reference_set.papers_by_author(author)), mean_p100=mean_p100(reference_set, author, policy)) for author in reference_set.author_labels()
        )
    return ReportTable(label=reference_set.label, papers=reference_set.size, i_max=table.i_max, rows=tuple(rows), author_means=author_means, show_cumulated=show_cumulated)


def _cell(value: Fraction | None, precision: int) -> str:
    return "" if value is None else format_fraction(value, precision)


def _signed(value: Fraction | None, precision: int) -> str:
    text = _cell(value, precision)
    return f"+{text}" if value is not None and value > 0 and text.strip("0.") else text


def _join(counts: Iterable[int]) -> str:
    return ", ".join(map(str, counts)) or "none"


def render_report_table(report: ReportTable, precision: int = 1) -> str:
    table = PrettyTable()
    table.field_names = ["citations", "papers", "rank", "P100", *(["cumulated %"] if report.show_cumulated else [])]
    table.align = "r"
    for row in report.rows:
        cells = [row.citation_count, row.paper_count, "" if row.rank is None else row.rank, _cell(row.p100, precision)]
        if report.show_cumulated:
            cells.append(_cell(None if row.cumulated_fraction is None else row.cumulated_fraction * 100, precision))
        table.add_row(cells)

    blocks = [f"{report.label}: {report.papers} papers, {report.i_max + 1} unique citation counts, i_max = {report.i_max}", table.get_string()]
    if report.author_means:
        authors = PrettyTable(["author", "papers", "mean P100"])
        authors.align = "r"
        authors.align["author"] = "l"
        for mean in report.author_means:
            authors.add_row([mean.author, mean.papers, format_fraction(mean.mean_p100, precision + 1)])
        blocks.append(authors.get_string())
    return "\n".join(blocks)


def report_records(report: ReportTable, precision: int = 1) -> list[dict[str, Any]]:
    """One JSON-ready record per ranked count; exact values are kept as 'p/q' strings next to the displayed ones."""
    records = []
    for row in report.rows:
        if row.rank is None:
            continue
        records.append(
            {
                "label": report.label,
                "citations": row.citation_count,
                "papers": row.paper_count,
                "rank": row.rank,
                "i_max": report.i_max,
                "p100": str(row.p100),
                "p100_display": format_fraction(row.p100, precision),
                "cumulated": None if row.cumulated_fraction is None else str(row.cumulated_fraction),
            }
        )
    return records


def write_report_records(report: ReportTable, file_path: str | Path, precision: int = 1) -> Path:
    path = Path(file_path)
    records = report_records(report, precision)
    path.write_text("".join(json.dumps(record) + "\n" for record in records), encoding="utf-8")
    log.info("report records written", path=str(path), records=len(records))
    return path


def read_report_records(file_path: str | Path) -> list[dict[str, Any]]:
    return [json.loads(line) for line in Path(file_path).read_text(encoding="utf-8").splitlines() if line.strip()]


def expand_report_records(records: Iterable[Mapping[str, Any]], label: str = "") -> ReferenceSet:
    """Rebuilds a reference set with the counts and paper counts of a compute output."""
    records = list(records)
    label = label or (records[0].get("label", "") if records else "")
    counts = {int(record["citations"]): int(record["papers"]) for record in records if int(record["papers"]) > 0}
    return reference_set_from_counts(counts, label=label, id_prefix=label or "p")


def render_diff(report: DiffReport, mechanism: MechanismReport, precision: int = 1) -> str:
    lines = [
        f"unique counts: {report.unique_counts_before} → {report.unique_counts_after}",
        f"i_max: {report.i_max_before} → {report.i_max_after}",
        f"net citation delta: {report.net_citation_delta:+d}" if report.net_citation_delta else "net citation delta: 0",
        f"counts appeared: {_join(report.counts_appeared)}",
        f"counts vanished: {_join(report.counts_vanished)}",
        f"mechanism: {mechanism.summary()}",
    ]
    blocks = ["\n".join(lines)]

    if report.per_author:
        authors = PrettyTable(["author", "papers", "mean P100 before", "mean P100 after", "delta (pp)", "delta (%)"])
        authors.align = "r"
        authors.align["author"] = "l"
        for author, shift in report.per_author.items():
            authors.add_row(
                [
                    author,
                    shift.papers,
                    _cell(shift.mean_before, precision + 1),
                    _cell(shift.mean_after, precision + 1),
                    _signed(shift.delta, precision + 1),
                    _signed(shift.relative_percent, precision + 1),
                ]
            )
        blocks.append(authors.get_string())

    counts = PrettyTable(["citations", "P100 before", "P100 after", "delta (pp)"])
    counts.align = "r"
    for citations, shift in report.count_shifts.items():
        counts.add_row([citations, _cell(shift.p100_before, precision), _cell(shift.p100_after, precision), _signed(shift.delta, precision)])
    blocks.append(counts.get_string())
    return "\n".join(blocks)


def render_top(reference_set: ReferenceSet, result: TopFractionResult, precision: int = 1) -> str:
    p100_line = "threshold P100: undefined (single unique citation count)"
    rank_line = "rank: undefined"
    if result.threshold_p100 is not None:
        p100_line = f"threshold P100: {format_fraction(result.threshold_p100.value, 2)}"
        rank_line = f"rank: {result.threshold_p100.rank}/{result.threshold_p100.i_max}"
    return "\n".join(
        [
            f"{reference_set.label}: {reference_set.size} papers, top {format_fraction(result.fraction * 100, precision)}%",
            f"threshold citations: {result.threshold_citations}",
            f"members: {result.member_count}",
            f"cumulated % at threshold: {format_fraction(result.cumulated_fraction * 100, precision)}",
            rank_line,
            p100_line,
        ]
    )


def compare_reference_sets(reference_sets: Sequence[ReferenceSet], fraction: Fraction | int | str | float, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> list[YearComparison]:
    """
    One row per reference set with its top-`fraction` threshold. A row is flagged when its threshold
    P100 differs from another row's; equal thresholds with unequal P100 are noted as such.
    """
    if len(reference_sets) < 2:
        raise ValueError(f"At least two reference sets are needed for a comparison, got {len(reference_sets)}")
    results = [top_fraction(reference_set, fraction, policy) for reference_set in reference_sets]
    values = [None if result.threshold_p100 is None else result.threshold_p100.value for result in results]

    rows = []
    for position, (reference_set, result) in enumerate(zip(reference_sets, results, strict=True)):
        differing = [other for other in range(len(results)) if other != position and values[other] != values[position]]
        same_threshold = [reference_sets[other].label for other in differing if results[other].threshold_citations == result.threshold_citations]
        rows.append(
            YearComparison(
                label=reference_set.label,
                papers=reference_set.size,
                i_max=build_unique_table(reference_set).i_max,
                top_count=max(reference_set.citation_counts()),
                threshold_citations=result.threshold_citations,
                threshold_p100=result.threshold_p100,
                flagged=bool(differing),
                note=f"same threshold as {', '.join(same_threshold)}" if same_threshold else "",
            )
        )
    log.debug("reference sets compared", sets=len(rows), flagged=sum(row.flagged for row in rows))
    return rows


def render_comparison(rows: Sequence[YearComparison]) -> str:
    table = PrettyTable(["dataset", "papers", "i_max", "top count", "threshold", "threshold P100", "flag", "note"])
    table.align = "r"
    table.align["dataset"] = "l"
    table.align["note"] = "l"
    for row in rows:
        value = "" if row.threshold_p100 is None else format_fraction(row.threshold_p100.value, 2)
        table.add_row([row.label, row.papers, row.i_max, row.top_count, row.threshold_citations, value, "*" if row.flagged else "", row.note])
    return table.get_string()
