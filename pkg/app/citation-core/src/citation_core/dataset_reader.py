import csv
import io
import re
from pathlib import Path

import structlog

from citation_core.core import CitationError, DatasetFormatError
from citation_core.models import PaperRecord, ReferenceSet, validate_reference_set

log = structlog.get_logger()

DATASET_COLUMNS = ("id", "citations", "authors", "year", "categories")
LIST_SEPARATOR = ";"

_COUNT = re.compile(r"[0-9]+", re.ASCII)
_YEAR = re.compile(r"-?[0-9]+", re.ASCII)


def decode_text(data: bytes, source: str, error: type[CitationError]) -> str:
    """Decodes UTF-8 text; undecodable bytes raise `error` with the line they are on."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise error(f"{source} is not valid UTF-8 text ({e.reason} at byte {e.start})", data.count(b"\n", 0, e.start) + 1) from e


class DatasetReader:
    """
    Reads reference sets from CSV files with the columns id, citations, authors, year and categories.

    Lines starting with '#' and blank lines are ignored, authors and categories are ';'-separated
    and year may be left empty. Every problem is reported with the line it was found on.
    """

    def read_dataset(self, file_path: str | Path) -> ReferenceSet:
        path = Path(file_path)
        content = decode_text(path.read_bytes(), f"dataset '{path.name}'", DatasetFormatError)
        reference_set = self.parse(content, label=path.stem)
        log.info("dataset read", path=str(path), papers=reference_set.size, citations=reference_set.total_citations())
        return reference_set

    def parse(self, content: str, label: str = "") -> ReferenceSet:
        header_seen = False
        papers: list[PaperRecord] = []
        first_line_of: dict[str, int] = {}

        for line_number, line in enumerate(content.splitlines(), start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = [field.strip() for field in next(csv.reader([line]))]
            if not header_seen:
                if tuple(fields) != DATASET_COLUMNS:
                    raise DatasetFormatError(f"expected header '{','.join(DATASET_COLUMNS)}', got '{line.strip()}'", line_number)
                header_seen = True
                continue
            paper = self._parse_row(fields, line_number)
            if paper.id in first_line_of:
                raise DatasetFormatError(f"duplicate paper id '{paper.id}' (first seen on line {first_line_of[paper.id]})", line_number)
            first_line_of[paper.id] = line_number
            papers.append(paper)

        if not header_seen:
            raise DatasetFormatError(f"dataset '{label}' has no header line")
        if not papers:
            raise DatasetFormatError(f"dataset '{label}' contains no papers")
        return validate_reference_set(papers, label=label)

    def _parse_row(self, fields: list[str], line_number: int) -> PaperRecord:
        if len(fields) != len(DATASET_COLUMNS):
            raise DatasetFormatError(f"expected {len(DATASET_COLUMNS)} fields, got {len(fields)}", line_number)
        paper_id, citations, authors, year, categories = fields
        if not paper_id:
            raise DatasetFormatError("empty paper id", line_number)
        if not _COUNT.fullmatch(citations):
            raise DatasetFormatError(f"citations must be a non-negative integer, got '{citations}'", line_number)
        if year and not _YEAR.fullmatch(year):
            raise DatasetFormatError(f"year must be an integer, got '{year}'", line_number)
        try:
            return PaperRecord(
                id=paper_id,
                citations=int(citations),
                authors=_split_labels(authors),
                year=int(year) if year else None,
                categories=_split_labels(categories),
            )
        except CitationError as e:
            raise DatasetFormatError(str(e), line_number) from e


def _split_labels(value: str) -> frozenset[str]:
    return frozenset(label.strip() for label in value.split(LIST_SEPARATOR) if label.strip())


def read_dataset(file_path: str | Path) -> ReferenceSet:
    return DatasetReader().read_dataset(file_path)


def parse_dataset(content: str, label: str = "") -> ReferenceSet:
    return DatasetReader().parse(content, label=label)


def format_dataset(reference_set: ReferenceSet) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(DATASET_COLUMNS)
    for paper in reference_set.papers:
        writer.writerow(
            [
                paper.id,
                paper.citations,
                LIST_SEPARATOR.join(sorted(paper.authors)),
                "" if paper.year is None else paper.year,
                LIST_SEPARATOR.join(sorted(paper.categories)),
            ]
        )
    return buffer.getvalue()


def write_dataset(reference_set: ReferenceSet, file_path: str | Path) -> Path:
    path = Path(file_path)
    path.write_text(format_dataset(reference_set), encoding="utf-8")
    log.info("dataset written", path=str(path), papers=reference_set.size)
    return path
