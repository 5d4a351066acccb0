from enum import StrEnum
from fractions import Fraction

from citation_core.models import IndicatorValue
from pydantic import BaseModel, ConfigDict, Field, model_validator


class DegeneratePolicy(StrEnum):
    """What P100 means for a reference set whose papers all share one citation count."""

    RAISE = "raise"
    TOP = "top"


class ClassBoundary(StrEnum):
    INCLUSIVE = "inclusive"
    EXCLUSIVE = "exclusive"


class CumulatedRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    citation_count: int = Field(..., description="A ranked citation count.")
    paper_count: int = Field(..., description="Number of papers holding the count.")
    cumulated_fraction: Fraction = Field(..., description="Exact share of papers with at most this many citations.")

    @property
    def cumulated_percentage(self) -> Fraction:
        return self.cumulated_fraction * 100


class TopFractionResult(BaseModel):
    """The papers forming the top `fraction` of a reference set and the count that opens the class."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    fraction: Fraction = Field(..., description="Requested share, strictly between 0 and 1.")
    threshold_citations: int = Field(..., description="Smallest count whose cumulated share exceeds 1 - fraction.")
    member_count: int = Field(..., description="Number of papers at or above the threshold.")
    member_ids: frozenset[str] = Field(..., description="Identifiers of the member papers.")
    threshold_p100: IndicatorValue | None = Field(default=None, description="P100 of the threshold, absent for a degenerate set under the raise policy.")
    cumulated_fraction: Fraction = Field(..., description="Exact cumulated share at the threshold count.")

    @model_validator(mode="after")
    def _check_members(self) -> "TopFractionResult":
        if self.member_count != len(self.member_ids):
            raise ValueError(f"member_count {self.member_count} does not match {len(self.member_ids)} member ids")
        return self
