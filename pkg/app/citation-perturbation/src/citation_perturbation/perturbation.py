import statistics
from collections import defaultdict

import structlog
from citation_core.models import PaperRecord, ReferenceSet, validate_reference_set
from citation_indicators.indicators import build_unique_table, p100_by_count
from citation_indicators.models import DegeneratePolicy

from citation_perturbation.core import MismatchedIdsError, NegativeResultError, OverlappingSelectorsError, SelectorUnresolvedError
from citation_perturbation.models import AuthorShift, CountShift, DiffReport, IdSelector, PaperShift, PerturbationDelta, PerturbationSpec

log = structlog.get_logger()


class _SelectorIndex:
    """Looks papers up by id and by (count, ordinal) in the unchanged reference set."""

    def __init__(self, reference_set: ReferenceSet):
        self.by_id = {paper.id: paper for paper in reference_set.papers}
        self.by_count: dict[int, list[PaperRecord]] = defaultdict(list)
        for paper in reference_set.papers:
            self.by_count[paper.citations].append(paper)

    def resolve(self, delta: PerturbationDelta) -> PaperRecord:
        selector = delta.selector
        if isinstance(selector, IdSelector):
            paper = self.by_id.get(selector.paper_id)
            if paper is None:
                raise SelectorUnresolvedError(f"No paper with id '{selector.paper_id}'", delta.line_number)
            return paper
        papers = self.by_count.get(selector.citations, [])
        if selector.ordinal > len(papers):
            raise SelectorUnresolvedError(f"Selector {selector} needs {selector.ordinal} papers with {selector.citations} citations, found {len(papers)}", delta.line_number)
        return papers[selector.ordinal - 1]


def apply(reference_set: ReferenceSet, spec: PerturbationSpec) -> ReferenceSet:
    """
    Applies every delta of the spec at once. Selectors resolve against the original set, so
    earlier deltas never move papers into or out of later count selectors; on any error
    nothing is applied.
    """
    index = _SelectorIndex(reference_set)
    changes: dict[str, PerturbationDelta] = {}
    for delta in spec.deltas:
        paper = index.resolve(delta)
        if paper.id in changes:
            raise OverlappingSelectorsError(f"Selector {delta.selector} resolves to paper {paper.id}, already changed by {changes[paper.id].selector}", delta.line_number)
        if paper.citations + delta.delta < 0:
            raise NegativeResultError(f"{delta} would leave paper {paper.id} with {paper.citations + delta.delta} citations", delta.line_number)
        changes[paper.id] = delta

    papers = [paper if paper.id not in changes else paper.model_copy(update={"citations": paper.citations + changes[paper.id].delta}) for paper in reference_set.papers]
    log.info("perturbation applied", label=reference_set.label, deltas=len(spec.deltas), net_delta=spec.net_delta())
    return validate_reference_set(papers, label=reference_set.label)


def _mean(values):
    return statistics.mean(values) if values else None


def diff(before: ReferenceSet, after: ReferenceSet, policy: DegeneratePolicy = DegeneratePolicy.RAISE) -> DiffReport:
    if before.ids() != after.ids():
        missing = sorted(before.ids() ^ after.ids())
        raise MismatchedIdsError(f"Reference sets '{before.label}' and '{after.label}' differ in paper ids: {', '.join(missing[:5])}")

    table_before = build_unique_table(before)
    table_after = build_unique_table(after)
    values_before = p100_by_count(table_before, policy)
    values_after = p100_by_count(table_after, policy)
    after_by_id = {paper.id: paper for paper in after.papers}

    per_paper = {}
    for paper in before.papers:
        changed = after_by_id[paper.id]
        per_paper[paper.id] = PaperShift(
            citations_before=paper.citations,
            citations_after=changed.citations,
            p100_before=values_before[paper.citations].value,
            p100_after=values_after[changed.citations].value,
        )

    per_author = {}
    for author in sorted(set(before.author_labels()) | set(after.author_labels())):
        papers_before = before.papers_by_author(author)
        papers_after = after.papers_by_author(author)
        per_author[author] = AuthorShift(
            papers=max(len(papers_before), len(papers_after)),
            mean_before=_mean([values_before[paper.citations].value for paper in papers_before]),
            mean_after=_mean([values_after[paper.citations].value for paper in papers_after]),
        )

    counts_before = set(table_before.citation_counts)
    counts_after = set(table_after.citation_counts)
    count_shifts = {
        citations: CountShift(
            citations=citations,
            p100_before=values_before[citations].value if citations in values_before else None,
            p100_after=values_after[citations].value if citations in values_after else None,
        )
        for citations in sorted(counts_before | counts_after)
    }

    report = DiffReport(
        counts_appeared=tuple(sorted(counts_after - counts_before)),
        counts_vanished=tuple(sorted(counts_before - counts_after)),
        i_max_before=table_before.i_max,
        i_max_after=table_after.i_max,
        per_paper=per_paper,
        per_author=per_author,
        count_shifts=count_shifts,
        net_citation_delta=after.total_citations() - before.total_citations(),
    )
    log.debug("diff computed", before=before.label, i_max_before=report.i_max_before, i_max_after=report.i_max_after, appeared=len(report.counts_appeared), vanished=len(report.counts_vanished))
    return report
