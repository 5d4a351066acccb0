from bisect import bisect_left
from collections.abc import Iterable
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from citation_core.core import DuplicateIdError, EmptySetError, InvalidLabelError, NegativeCitationsError


def _check_text(value: str, what: str) -> None:
    # values must survive a write and re-read of the dataset file unchanged
    if not value.strip():
        raise InvalidLabelError(f"Empty {what}")
    if value != value.strip() or "\n" in value or "\r" in value:
        raise InvalidLabelError(f"The {what} {value!r} has surrounding whitespace or a line break")


class PaperRecord(BaseModel):
    """One publication of a reference set."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(..., description="Opaque identifier, unique within its reference set.")
    citations: int = Field(..., description="Number of citations the paper received.")
    authors: frozenset[str] = Field(default_factory=frozenset, description="Author labels, possibly empty.")
    year: int | None = Field(default=None, description="Publication year, if known.")
    categories: frozenset[str] = Field(default_factory=frozenset, description="Subject category labels, possibly empty.")

    @model_validator(mode="after")
    def _check_record(self) -> "PaperRecord":
        if self.citations < 0:
            raise NegativeCitationsError(f"Paper {self.id} has a negative citation count: {self.citations}")
        _check_text(self.id, "paper id")
        if self.id.startswith("#"):
            raise InvalidLabelError(f"Paper id {self.id!r} starts with the comment marker '#'")
        for label in sorted(self.authors | self.categories):
            _check_text(label, f"label of paper {self.id}")
            if ";" in label:
                raise InvalidLabelError(f"Label {label!r} of paper {self.id} contains the list separator ';'")
        return self


class ReferenceSet(BaseModel):
    """A non-empty collection of papers with unique identifiers, compared against each other."""

    model_config = ConfigDict(frozen=True)

    papers: tuple[PaperRecord, ...] = Field(..., description="The papers, in input order.")
    label: str = Field(default="", description="Human readable name of the set, e.g. the dataset file stem.")

    @model_validator(mode="after")
    def _check_papers(self) -> "ReferenceSet":
        if not self.papers:
            raise EmptySetError(f"Reference set '{self.label}' contains no papers")
        seen: set[str] = set()
        for paper in self.papers:
            if paper.id in seen:
                raise DuplicateIdError(f"Duplicate paper id in reference set '{self.label}': {paper.id}")
            seen.add(paper.id)
        return self

    @property
    def size(self) -> int:
        return len(self.papers)

    def total_citations(self) -> int:
        return sum(paper.citations for paper in self.papers)

    def citation_counts(self) -> list[int]:
        return [paper.citations for paper in self.papers]

    def ids(self) -> set[str]:
        return {paper.id for paper in self.papers}

    def paper(self, paper_id: str) -> PaperRecord:
        for paper in self.papers:
            if paper.id == paper_id:
                return paper
        raise KeyError(paper_id)

    def author_labels(self) -> list[str]:
        return sorted({author for paper in self.papers for author in paper.authors})

    def papers_by_author(self, author: str) -> list[PaperRecord]:
        return [paper for paper in self.papers if author in paper.authors]

    def category_labels(self) -> list[str]:
        return sorted({category for paper in self.papers for category in paper.categories})


def validate_reference_set(papers: Iterable[PaperRecord], label: str = "") -> ReferenceSet:
    """
    Builds a reference set, rejecting an empty input, duplicate identifiers and negative citation counts.

    The domain errors of citation_core.core propagate unchanged out of the pydantic validators.
    """
    return ReferenceSet(papers=tuple(papers), label=label)


class UniqueCountEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    citations: int = Field(..., ge=0, description="A citation count held by at least one paper.")
    papers: int = Field(..., ge=1, description="Number of papers holding this count.")
    rank: int = Field(..., ge=0, description="Zero-based position of the count among the distinct counts.")


class UniqueCountTable(BaseModel):
    """
    The ranking scale of a reference set: its distinct citation counts in increasing order.

    Counts that no paper holds are absent, so the scale has no gaps and ties share one entry.
    """

    model_config = ConfigDict(frozen=True)

    entries: tuple[UniqueCountEntry, ...] = Field(..., description="Entries in strictly increasing citation order.")

    @model_validator(mode="after")
    def _check_entries(self) -> "UniqueCountTable":
        if not self.entries:
            raise ValueError("A unique count table needs at least one entry")
        for position, entry in enumerate(self.entries):
            if entry.rank != position:
                raise ValueError(f"Entry for {entry.citations} citations has rank {entry.rank}, expected {position}")
            if position and entry.citations <= self.entries[position - 1].citations:
                raise ValueError("Citation counts must be strictly increasing")
        return self

    @property
    def i_max(self) -> int:
        """Highest rank, one less than the number of distinct counts."""
        return len(self.entries) - 1

    @property
    def is_degenerate(self) -> bool:
        return self.i_max == 0

    @property
    def paper_total(self) -> int:
        return sum(entry.papers for entry in self.entries)

    @property
    def citation_counts(self) -> tuple[int, ...]:
        return tuple(entry.citations for entry in self.entries)

    @property
    def min_count(self) -> int:
        return self.entries[0].citations

    @property
    def max_count(self) -> int:
        return self.entries[-1].citations

    def entry_for(self, citations: int) -> UniqueCountEntry | None:
        position = bisect_left(self.entries, citations, key=lambda entry: entry.citations)
        if position < len(self.entries) and self.entries[position].citations == citations:
            return self.entries[position]
        return None

    def rank_of(self, citations: int) -> int | None:
        entry = self.entry_for(citations)
        return None if entry is None else entry.rank


class IndicatorValue(BaseModel):
    """An exact P100 value in [0, 100] together with the rank it was derived from."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Fraction = Field(..., description="Exact P100 value.")
    rank: int = Field(..., ge=0, description="Rank of the citation count on the scale.")
    i_max: int = Field(..., ge=0, description="Highest rank of the scale the value refers to.")

    @model_validator(mode="after")
    def _check_value(self) -> "IndicatorValue":
        if self.rank > self.i_max:
            raise ValueError(f"Rank {self.rank} exceeds i_max {self.i_max}")
        if not 0 <= self.value <= 100:
            raise ValueError(f"P100 value {self.value} lies outside [0, 100]")
        if self.i_max and self.value != Fraction(100 * self.rank, self.i_max):
            raise ValueError(f"P100 value {self.value} does not match rank {self.rank} of {self.i_max}")
        return self

    @classmethod
    def of(cls, rank: int, i_max: int) -> "IndicatorValue":
        return cls(value=Fraction(100 * rank, i_max), rank=rank, i_max=i_max)
