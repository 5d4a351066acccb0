"""
Public API for the citation_core package.
Exposes the domain types shared by the indicator, perturbation and reporting packages.
"""

from .core import CitationError, DatasetFormatError, DuplicateIdError, EmptySetError, InvalidLabelError, NegativeCitationsError
from .dataset_reader import DATASET_COLUMNS, DatasetReader, format_dataset, parse_dataset, read_dataset, write_dataset
from .models import IndicatorValue, PaperRecord, ReferenceSet, UniqueCountEntry, UniqueCountTable, validate_reference_set

__all__ = [
    "DATASET_COLUMNS",
    "CitationError",
    "DatasetFormatError",
    "DatasetReader",
    "DuplicateIdError",
    "EmptySetError",
    "IndicatorValue",
    "InvalidLabelError",
    "NegativeCitationsError",
    "PaperRecord",
    "ReferenceSet",
    "UniqueCountEntry",
    "UniqueCountTable",
    "format_dataset",
    "parse_dataset",
    "read_dataset",
    "validate_reference_set",
    "write_dataset",
]
