"""
Public API for the citation_generators package.
Builds the small reference sets used to demonstrate how P100 reacts to the shape of a field.
"""

from .generators import UnknownCaseError, field_case, field_case_reference_set, reference_set_from_counts, table1_models
from .models import FIELD_SIZE, SINGLY_CITED, FieldCase

__all__ = [
    "FIELD_SIZE",
    "SINGLY_CITED",
    "FieldCase",
    "UnknownCaseError",
    "field_case",
    "field_case_reference_set",
    "reference_set_from_counts",
    "table1_models",
]
