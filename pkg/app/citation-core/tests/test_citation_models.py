import random
from fractions import Fraction

import pytest
from citation_core.core import DuplicateIdError, EmptySetError, InvalidLabelError, NegativeCitationsError
from citation_core.models import IndicatorValue, PaperRecord, ReferenceSet, UniqueCountEntry, UniqueCountTable, validate_reference_set
from pydantic import ValidationError

TABLE1_COUNTS = [1, 2, 3, 4, 4, 4, 7, 10]


def _papers(counts, prefix="p"):
    return [PaperRecord(id=f"{prefix}{i}", citations=c) for i, c in enumerate(counts, start=1)]


def test_validate_reference_set_sums_citations():
    """
    Tests that the total citations of the eight-paper example set add up to 35.
    """
    reference_set = validate_reference_set(_papers(TABLE1_COUNTS), label="table1")
    assert reference_set.total_citations() == 35
    assert reference_set.size == 8
    assert reference_set.label == "table1"


def test_validate_reference_set_rejects_empty_input():
    with pytest.raises(EmptySetError, match="contains no papers"):
        validate_reference_set([])


def test_validate_reference_set_rejects_duplicate_ids():
    papers = [PaperRecord(id="p1", citations=1), PaperRecord(id="p1", citations=2)]
    with pytest.raises(DuplicateIdError, match="p1"):
        validate_reference_set(papers)


def test_paper_record_rejects_negative_citations():
    """
    Tests that the domain error is raised directly and not wrapped in a ValidationError.
    """
    with pytest.raises(NegativeCitationsError, match="p7"):
        PaperRecord(id="p7", citations=-1)


@pytest.mark.parametrize(
    ("fields", "message"),
    [
        ({"id": " p1"}, "surrounding whitespace"),
        ({"id": ""}, "Empty paper id"),
        ({"id": "#1"}, "comment marker"),
        ({"id": "p1\np2"}, "line break"),
        ({"authors": {"A;B"}}, "list separator"),
        ({"authors": {" A"}}, "surrounding whitespace"),
        ({"categories": {""}}, "Empty label"),
        ({"categories": {"Physics;Chemistry"}}, "list separator"),
    ],
)
def test_paper_record_rejects_values_the_dataset_format_cannot_carry(fields, message):
    """
    Tests that ids and labels which would come back altered from a dataset file are refused on construction.
    """
    with pytest.raises(InvalidLabelError, match=message):
        PaperRecord(**{"id": "p1", "citations": 1, **fields})


def test_paper_record_is_immutable():
    paper = PaperRecord(id="p1", citations=3, authors=["X", "Y"])
    assert paper.authors == frozenset({"X", "Y"})
    with pytest.raises(ValidationError):
        paper.citations = 4


def test_total_citations_is_invariant_under_reordering():
    rng = random.Random(20140101)
    for _ in range(200):
        counts = [rng.randint(0, 50) for _ in range(rng.randint(1, 30))]
        papers = _papers(counts)
        shuffled = papers[:]
        rng.shuffle(shuffled)
        assert validate_reference_set(shuffled).total_citations() == validate_reference_set(papers).total_citations() == sum(counts)


def test_reference_set_helpers():
    papers = [
        PaperRecord(id="a", citations=5, authors={"X"}, categories={"Physics"}),
        PaperRecord(id="b", citations=0, authors={"X", "Y"}, categories={"Physics", "Chemistry"}),
        PaperRecord(id="c", citations=2),
    ]
    reference_set = ReferenceSet(papers=papers)
    assert reference_set.citation_counts() == [5, 0, 2]
    assert reference_set.author_labels() == ["X", "Y"]
    assert [paper.id for paper in reference_set.papers_by_author("X")] == ["a", "b"]
    assert reference_set.category_labels() == ["Chemistry", "Physics"]
    assert reference_set.paper("c").citations == 2
    assert reference_set.ids() == {"a", "b", "c"}
    with pytest.raises(KeyError):
        reference_set.paper("missing")


def test_unique_count_table_lookups():
    table = UniqueCountTable(
        entries=[
            UniqueCountEntry(citations=1, papers=1, rank=0),
            UniqueCountEntry(citations=4, papers=3, rank=1),
            UniqueCountEntry(citations=10, papers=1, rank=2),
        ]
    )
    assert table.i_max == 2
    assert table.paper_total == 5
    assert table.citation_counts == (1, 4, 10)
    assert (table.min_count, table.max_count) == (1, 10)
    assert table.rank_of(4) == 1
    assert table.rank_of(5) is None
    assert table.rank_of(11) is None
    assert not table.is_degenerate


@pytest.mark.parametrize(
    "entries",
    [
        [],
        [UniqueCountEntry(citations=3, papers=1, rank=0), UniqueCountEntry(citations=3, papers=1, rank=1)],
        [UniqueCountEntry(citations=3, papers=1, rank=0), UniqueCountEntry(citations=5, papers=1, rank=2)],
    ],
)
def test_unique_count_table_rejects_broken_entries(entries):
    with pytest.raises(ValidationError):
        UniqueCountTable(entries=entries)


def test_unique_count_entry_needs_a_paper():
    with pytest.raises(ValidationError):
        UniqueCountEntry(citations=3, papers=0, rank=0)


def test_indicator_value_is_exact():
    value = IndicatorValue.of(rank=1, i_max=3)
    assert value.value == Fraction(100, 3)
    assert value.rank == 1


def test_indicator_value_rejects_inconsistent_values():
    with pytest.raises(ValidationError):
        IndicatorValue(value=Fraction(50), rank=1, i_max=3)
    with pytest.raises(ValidationError):
        IndicatorValue(value=Fraction(100), rank=4, i_max=3)


if __name__ == "__main__":
    pytest.main([__file__])
