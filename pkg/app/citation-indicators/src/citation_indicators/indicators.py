import statistics
from collections import Counter
from collections.abc import Mapping, Sequence
from fractions import Fraction

import structlog
from citation_core.models import IndicatorValue, PaperRecord, ReferenceSet, UniqueCountEntry, UniqueCountTable, validate_reference_set

from citation_indicators.core import DegenerateTableError, IndicatorError, UnknownAuthorError, UnrankedCountError
from citation_indicators.display import as_fraction
from citation_indicators.models import ClassBoundary, DegeneratePolicy

log = structlog.get_logger()


def build_unique_table(reference_set: ReferenceSet) -> UniqueCountTable:
    """Collapses the papers onto their distinct citation counts; rank i is the position of a count on that scale."""
    papers_at = Counter(reference_set.citation_counts())
    table = UniqueCountTable(entries=[UniqueCountEntry(citations=count, papers=papers_at[count], rank=rank) for rank, count in enumerate(sorted(papers_at))])
    log.debug("unique count table built", label=reference_set.label, papers=reference_set.size, i_max=table.i_max)
    return table


def p100(citations: int, table: UniqueCountTable, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> IndicatorValue:
    """
    P100 = 100 * rank / i_max of a citation count on the scale of unique counts.

    Counts that no paper holds are unranked. When every paper shares one count the
    scale has no extent: the raise policy refuses, the top policy maps the count to 100.
    """
    rank = table.rank_of(citations)
    if rank is None:
        raise UnrankedCountError(f"Citation count {citations} is not held by any paper of the reference set")
    if table.is_degenerate:
        if DegeneratePolicy(policy) is DegeneratePolicy.RAISE:
            raise DegenerateTableError(f"All papers share the citation count {citations}; P100 is undefined for i_max = 0")
        return IndicatorValue(value=Fraction(100), rank=0, i_max=0)
    return IndicatorValue.of(rank, table.i_max)


def p100_by_count(table: UniqueCountTable, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> dict[int, IndicatorValue]:
    return {entry.citations: p100(entry.citations, table, policy) for entry in table.entries}


def p100_all(reference_set: ReferenceSet, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> dict[str, IndicatorValue]:
    values = p100_by_count(build_unique_table(reference_set), policy)
    return {paper.id: values[paper.citations] for paper in reference_set.papers}


def mean_p100(reference_set: ReferenceSet, author: str, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> Fraction:
    """Unweighted mean P100 of the author's papers, each paper ranked within the whole reference set."""
    papers = reference_set.papers_by_author(author)
    if not papers:
        raise UnknownAuthorError(f"No paper of reference set '{reference_set.label}' is attributed to author {author}")
    values = p100_by_count(build_unique_table(reference_set), policy)
    return statistics.mean(values[paper.citations].value for paper in papers)


def multi_category_p100(categories: Sequence[tuple[UniqueCountTable, int]], policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> Fraction:
    """Unweighted mean of the P100 values a paper obtains in each of its categories' reference sets."""
    if not categories:
        raise IndicatorError("A paper needs at least one category to average over")
    return statistics.mean(p100(citations, table, policy).value for table, citations in categories)


def split_by_category(reference_set: ReferenceSet) -> dict[str, ReferenceSet]:
    """One reference set per subject category; a paper in several categories appears in each of them."""
    return {
        category: validate_reference_set(
            (paper for paper in reference_set.papers if category in paper.categories),
            label=f"{reference_set.label}/{category}" if reference_set.label else category,
        )
        for category in reference_set.category_labels()
    }


def category_p100(paper: PaperRecord, tables: Mapping[str, UniqueCountTable], policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> Fraction:
    missing = sorted(paper.categories - tables.keys())
    if missing:
        raise IndicatorError(f"No reference set for categories {missing} of paper {paper.id}")
    return multi_category_p100([(tables[category], paper.citations) for category in sorted(paper.categories)], policy)


def in_percentile_class(
    citations: int,
    table: UniqueCountTable,
    fraction: Fraction | int | str | float,
    boundary: ClassBoundary = ClassBoundary.INCLUSIVE,
    policy: DegeneratePolicy = DegeneratePolicy.RAISE,
) -> bool:
    """
    Whether a count belongs to the top `fraction` class by its P100 value.

    A paper with P100 exactly at 100 * (1 - fraction) is in the class only for the inclusive boundary.
    """
    share = as_fraction(fraction)
    value = p100(citations, table, policy).value
    bound = 100 * (1 - share)
    if ClassBoundary(boundary) is ClassBoundary.INCLUSIVE:
        return value >= bound
    return value > bound
