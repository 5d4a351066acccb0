from citation_core.core import CitationError


class IndicatorError(CitationError):
    """Base exception for indicator computations."""

    pass


class UnrankedCountError(IndicatorError):
    """The citation count is held by no paper of the reference set, so it has no rank."""

    pass


class DegenerateTableError(IndicatorError):
    """All papers share one citation count; i_max is 0 and P100 is undefined."""

    pass


class UnknownAuthorError(IndicatorError):
    pass


class PositionOutOfRangeError(IndicatorError):
    pass


class InvalidFractionError(IndicatorError):
    pass
