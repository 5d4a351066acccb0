import math
from fractions import Fraction

import structlog
from citation_core.models import ReferenceSet, UniqueCountTable

from citation_indicators.core import IndicatorError, InvalidFractionError, PositionOutOfRangeError
from citation_indicators.display import as_fraction
from citation_indicators.indicators import build_unique_table, p100
from citation_indicators.models import CumulatedRow, DegeneratePolicy, TopFractionResult

log = structlog.get_logger()


def cumulated_percentages(table: UniqueCountTable, total: int) -> list[CumulatedRow]:
    if total != table.paper_total:
        raise IndicatorError(f"Total of {total} papers does not match the {table.paper_total} papers of the table")
    rows = []
    running = 0
    for entry in table.entries:
        running += entry.papers
        rows.append(CumulatedRow(citation_count=entry.citations, paper_count=entry.papers, cumulated_fraction=Fraction(running, total)))
    return rows


def top_fraction(reference_set: ReferenceSet, fraction: Fraction | int | str | float, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> TopFractionResult:
    """
    The top `fraction` of a reference set: every paper with at least the threshold count, where the
    threshold is the smallest count whose exact cumulated share strictly exceeds 1 - fraction.

    With many ties the class can be larger or smaller than the requested share.
    """
    share = as_fraction(fraction)
    if not 0 < share < 1:
        raise InvalidFractionError(f"Fraction must lie strictly between 0 and 1, got {share}")
    table = build_unique_table(reference_set)
    row = next(row for row in cumulated_percentages(table, reference_set.size) if row.cumulated_fraction > 1 - share)
    threshold_p100 = None
    if not table.is_degenerate or DegeneratePolicy(policy) is DegeneratePolicy.TOP:
        threshold_p100 = p100(row.citation_count, table, policy)
    member_ids = frozenset(paper.id for paper in reference_set.papers if paper.citations >= row.citation_count)
    log.debug("top fraction", label=reference_set.label, fraction=str(share), threshold=row.citation_count, members=len(member_ids))
    return TopFractionResult(
        fraction=share,
        threshold_citations=row.citation_count,
        member_count=len(member_ids),
        member_ids=member_ids,
        threshold_p100=threshold_p100,
        cumulated_fraction=row.cumulated_fraction,
    )


def median_paper_citations(reference_set: ReferenceSet) -> int:
    """Citation count of the paper at ascending position ceil(n/2)."""
    return sorted(reference_set.citation_counts())[math.ceil(reference_set.size / 2) - 1]


def hazen_percentile(position: int, n: int) -> Fraction:
    """Position-based percentile 100 * (position - 1/2) / n of the position-th paper out of n."""
    if n < 1 or not 1 <= position <= n:
        raise PositionOutOfRangeError(f"Position {position} is outside 1..{n}")
    return Fraction(100 * (2 * position - 1), 2 * n)


def hazen_percentiles(reference_set: ReferenceSet) -> dict[str, Fraction]:
    """Hazen percentiles of every paper, ranked individually in stable ascending order, so tied papers differ."""
    ranked = sorted(reference_set.papers, key=lambda paper: paper.citations)
    return {paper.id: hazen_percentile(position, reference_set.size) for position, paper in enumerate(ranked, start=1)}
