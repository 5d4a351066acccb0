import math
from collections.abc import Callable, Mapping
from fractions import Fraction

import structlog
from citation_core.core import CitationError
from citation_core.models import PaperRecord, ReferenceSet, validate_reference_set
from citation_perturbation.models import CountSelector, PerturbationSpec
from citation_perturbation.perturbation import apply

from citation_generators.models import FIELD_SIZE, SINGLY_CITED, FieldCase

log = structlog.get_logger()

# base field, only roughly an inverse power law, so stored as data: papers with 2..10 citations.
# 1 citation is fixed at SINGLY_CITED and 0 fills up to FIELD_SIZE
_CASE_A_CITED = {2: 10, 3: 7, 4: 5, 5: 4, 6: 3, 7: 2, 8: 2, 9: 1, 10: 1}

# (citations, author) of the eight-paper example; ids t1-01..t1-08 in this order
_SMALL_SET = ((1, "X"), (2, "Y"), (3, "Y"), (4, "Y"), (4, "Y"), (4, "Y"), (7, "Z"), (10, "X"))


class UnknownCaseError(CitationError):
    pass


def _halved() -> dict[int, int]:
    return {citations: math.ceil(Fraction(papers, 2)) for citations, papers in _CASE_A_CITED.items()}


def _one_and_a_half() -> dict[int, int]:
    return {citations: math.ceil(Fraction(3 * papers, 2)) for citations, papers in _CASE_A_CITED.items()}


def _shifted() -> dict[int, int]:
    # each count takes over the papers of the count below it, 1 citation holding SINGLY_CITED
    shifted = {1: SINGLY_CITED, **_CASE_A_CITED}
    return {citations: shifted[citations - 1] for citations in _CASE_A_CITED}


_CASE_RULES: dict[str, Callable[[], dict[int, int]]] = {
    "A": lambda: dict(_CASE_A_CITED),
    "B": _halved,
    "C": _one_and_a_half,
    "D": _shifted,
}


def field_case(case_id: str) -> FieldCase:
    rule = _CASE_RULES.get(case_id)
    if rule is None:
        raise UnknownCaseError(f"Unknown field case: {case_id}")
    cited = {1: SINGLY_CITED, **rule()}
    return FieldCase(case_id=case_id, paper_counts={0: FIELD_SIZE - sum(cited.values()), **cited})


def reference_set_from_counts(counts: Mapping[int, int], label: str = "", id_prefix: str = "p") -> ReferenceSet:
    """Expands a citation count -> number of papers mapping into papers with ids '<prefix>-c<count>-<n>'."""
    papers = [
        PaperRecord(id=f"{id_prefix}-c{citations:04d}-{n:04d}", citations=citations)
        for citations in sorted(counts)
        for n in range(1, counts[citations] + 1)
    ]
    return validate_reference_set(papers, label=label)


def field_case_reference_set(case_id: str) -> ReferenceSet:
    case = field_case(case_id)
    reference_set = reference_set_from_counts(case.paper_counts, label=f"table2_{case_id}", id_prefix=f"t2{case_id}")
    log.debug("field case generated", case_id=case_id, papers=reference_set.size, citations=reference_set.total_citations())
    return reference_set


def table1_models() -> tuple[ReferenceSet, ReferenceSet, ReferenceSet]:
    """
    The eight-paper example of authors X, Y and Z and its two single-citation modifications:
    the lowest cited paper gains a citation, then one of the three papers with four citations does.
    """
    original = validate_reference_set(
        [PaperRecord(id=f"t1-{n:02d}", citations=citations, authors={author}) for n, (citations, author) in enumerate(_SMALL_SET, start=1)],
        label="table1_orig",
    )
    first = apply(original, PerturbationSpec.of((CountSelector(citations=1), 1)))
    second = apply(original, PerturbationSpec.of((CountSelector(citations=4), 1)))
    return original, first.model_copy(update={"label": "table1_mod1"}), second.model_copy(update={"label": "table1_mod2"})
