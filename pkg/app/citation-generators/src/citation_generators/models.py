from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

FIELD_SIZE = 100
SINGLY_CITED = 20


class FieldCase(BaseModel):
    """A fictitious field of 100 papers over citation counts 0..10, 20 of them cited exactly once."""

    model_config = ConfigDict(frozen=True)

    case_id: Literal["A", "B", "C", "D"]
    paper_counts: dict[int, int] = Field(..., description="Number of papers per citation count 0..10.")

    @model_validator(mode="after")
    def _check_counts(self) -> "FieldCase":
        if sorted(self.paper_counts) != list(range(11)):
            raise ValueError(f"Field case {self.case_id} must cover the citation counts 0..10")
        if sum(self.paper_counts.values()) != FIELD_SIZE:
            raise ValueError(f"Field case {self.case_id} must hold {FIELD_SIZE} papers, got {sum(self.paper_counts.values())}")
        if self.paper_counts[1] != SINGLY_CITED:
            raise ValueError(f"Field case {self.case_id} must have {SINGLY_CITED} singly cited papers")
        if any(papers < 1 for papers in self.paper_counts.values()):
            raise ValueError(f"Every citation count of field case {self.case_id} needs at least one paper")
        return self

    @property
    def total_citations(self) -> int:
        return sum(citations * papers for citations, papers in self.paper_counts.items())
