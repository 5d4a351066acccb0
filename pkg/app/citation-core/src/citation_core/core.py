class CitationError(Exception):
    """Base exception for every package of the workspace."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message if line_number is None else f"line {line_number}: {message}")
        self.line_number = line_number


class EmptySetError(CitationError):
    """A reference set must contain at least one paper."""

    pass


class DuplicateIdError(CitationError):
    pass


class NegativeCitationsError(CitationError):
    pass


class DatasetFormatError(CitationError):
    """A dataset file could not be parsed."""

    pass


class InvalidLabelError(CitationError):
    """A paper id or label that the dataset file format cannot carry unchanged."""

    pass
