from citation_core.core import CitationError


class PerturbationError(CitationError):
    """Base exception for perturbations of a reference set."""

    pass


class SelectorUnresolvedError(PerturbationError):
    """No paper matches a selector of the perturbation."""

    pass


class NegativeResultError(PerturbationError):
    pass


class OverlappingSelectorsError(PerturbationError):
    """Two deltas of one perturbation resolve to the same paper."""

    pass


class MismatchedIdsError(PerturbationError):
    pass


class SpecFormatError(PerturbationError):
    pass
