"""
Public API for the citation_perturbation package.
Applies citation changes to reference sets and reports how the P100 scale responds.
"""

from .core import MismatchedIdsError, NegativeResultError, OverlappingSelectorsError, PerturbationError, SelectorUnresolvedError, SpecFormatError
from .mechanism import classify_mechanism
from .models import (
    AuthorShift,
    CountSelector,
    CountShift,
    DiffReport,
    IdSelector,
    Mechanism,
    MechanismReport,
    PaperShift,
    PerturbationDelta,
    PerturbationSpec,
    ScaleChange,
)
from .perturbation import apply, diff
from .spec_reader import format_perturbation_spec, parse_perturbation_spec, read_perturbation_spec

__all__ = [
    "AuthorShift",
    "CountSelector",
    "CountShift",
    "DiffReport",
    "IdSelector",
    "Mechanism",
    "MechanismReport",
    "MismatchedIdsError",
    "NegativeResultError",
    "OverlappingSelectorsError",
    "PaperShift",
    "PerturbationDelta",
    "PerturbationError",
    "PerturbationSpec",
    "ScaleChange",
    "SelectorUnresolvedError",
    "SpecFormatError",
    "apply",
    "classify_mechanism",
    "diff",
    "format_perturbation_spec",
    "parse_perturbation_spec",
    "read_perturbation_spec",
]
