from enum import StrEnum
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class IdSelector(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["id"] = "id"
    paper_id: str = Field(..., min_length=1, description="Identifier of the paper to change.")

    def __str__(self) -> str:
        return f"id:{self.paper_id}"


class CountSelector(BaseModel):
    """The ordinal-th paper (1-based, in input order) among the papers holding a citation count."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["at"] = "at"
    citations: int = Field(..., ge=0, description="Citation count the paper holds before the change.")
    ordinal: int = Field(default=1, ge=1, description="1-based position among the papers at that count.")

    def __str__(self) -> str:
        return f"at:{self.citations}#{self.ordinal}"


class PerturbationDelta(BaseModel):
    model_config = ConfigDict(frozen=True)

    selector: IdSelector | CountSelector = Field(..., discriminator="kind")
    delta: int = Field(..., description="Signed change of the paper's citation count.")
    line_number: int | None = Field(default=None, description="Line of the spec text the delta was read from.")

    def __str__(self) -> str:
        return f"{self.selector} {self.delta:+d}"


class PerturbationSpec(BaseModel):
    """An ordered list of citation changes, all resolved against the unchanged reference set."""

    model_config = ConfigDict(frozen=True)

    deltas: tuple[PerturbationDelta, ...] = Field(default=(), description="Changes in the order they were given.")

    def net_delta(self) -> int:
        return sum(delta.delta for delta in self.deltas)

    @classmethod
    def of(cls, *changes: tuple[IdSelector | CountSelector, int]) -> "PerturbationSpec":
        return cls(deltas=tuple(PerturbationDelta(selector=selector, delta=delta) for selector, delta in changes))


class PaperShift(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    citations_before: int
    citations_after: int
    p100_before: Fraction
    p100_after: Fraction

    @property
    def delta(self) -> Fraction:
        """Change in percentage points."""
        return self.p100_after - self.p100_before


class AuthorShift(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    papers: int = Field(..., description="Number of papers attributed to the author.")
    mean_before: Fraction | None = Field(default=None, description="Mean P100 before, absent when the author has no paper there.")
    mean_after: Fraction | None = Field(default=None, description="Mean P100 after, absent when the author has no paper there.")

    @property
    def delta(self) -> Fraction | None:
        if self.mean_before is None or self.mean_after is None:
            return None
        return self.mean_after - self.mean_before

    @property
    def relative_percent(self) -> Fraction | None:
        """Change relative to the mean before, in percent; absent when the mean before is 0."""
        if self.delta is None or not self.mean_before:
            return None
        return 100 * self.delta / self.mean_before


class CountShift(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    citations: int
    p100_before: Fraction | None = None
    p100_after: Fraction | None = None

    @property
    def delta(self) -> Fraction | None:
        if self.p100_before is None or self.p100_after is None:
            return None
        return self.p100_after - self.p100_before


class DiffReport(BaseModel):
    """How the P100 scale and values moved between two versions of one reference set."""

    model_config = ConfigDict(frozen=True)

    counts_appeared: tuple[int, ...] = Field(..., description="Unique counts present only after the change, ascending.")
    counts_vanished: tuple[int, ...] = Field(..., description="Unique counts present only before the change, ascending.")
    i_max_before: int
    i_max_after: int
    per_paper: dict[str, PaperShift]
    per_author: dict[str, AuthorShift]
    count_shifts: dict[int, CountShift] = Field(..., description="Every count present before or after, ascending.")
    net_citation_delta: int

    @property
    def unique_counts_before(self) -> int:
        return self.i_max_before + 1

    @property
    def unique_counts_after(self) -> int:
        return self.i_max_after + 1


class Mechanism(StrEnum):
    GAP_FILLED = "gap-filled"
    GAP_CREATED = "gap-created"
    EMPTIED = "emptied"


class ScaleChange(StrEnum):
    COMPRESSION = "compression"
    DILATION = "dilation"
    UNCHANGED = "unchanged"


class MechanismReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    tags: dict[int, Mechanism] = Field(..., description="Mechanism per appeared or vanished count, ascending.")
    scale_change: ScaleChange
    i_max_before: int
    i_max_after: int

    def counts_tagged(self, mechanism: Mechanism) -> list[int]:
        return [citations for citations, tag in self.tags.items() if tag is mechanism]

    def summary(self) -> str:
        parts = [f"{mechanism}: {', '.join(map(str, counts))}" for mechanism in Mechanism if (counts := self.counts_tagged(mechanism))]
        detail = f" ({'; '.join(parts)})" if parts else ""
        return f"{self.scale_change}, i_max {self.i_max_before} → {self.i_max_after}{detail}"
