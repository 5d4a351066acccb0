from fractions import Fraction

import pytest
from citation_core.dataset_reader import read_dataset
from citation_core.models import PaperRecord, validate_reference_set
from citation_indicators.display import format_fraction
from citation_indicators.indicators import build_unique_table, p100
from citation_perturbation.core import MismatchedIdsError, NegativeResultError, OverlappingSelectorsError, SelectorUnresolvedError
from citation_perturbation.mechanism import classify_mechanism
from citation_perturbation.models import CountSelector, IdSelector, Mechanism, PerturbationSpec, ScaleChange
from citation_perturbation.perturbation import apply, diff
from citation_perturbation.spec_reader import parse_perturbation_spec, read_perturbation_spec

TABLE3_COLUMNS = {
    "table3_orig": (57, {0: "0.0", 1: "1.8", 2: "3.5", 3: "5.3", 10: "17.5", 27: "47.4", 38: "66.7", 40: "68.4", 44: "75.4", 46: "77.2", 68: "94.7", 111: "96.5", 123: "100.0"}),
    "table3_mod1": (58, {1: "1.7", 39: "67.2", 40: "69.0", 48: "79.3", 119: "98.3"}),
    "table3_mod2": (59, {3: "5.1", 45: "76.3", 46: "78.0", 52: "84.7", 68: "94.9", 111: "96.6"}),
    "table3_mod3": (56, {2: "3.6", 14: "25.0", 40: "69.6", 56: "87.5", 61: "89.3"}),
    "table3_mod4": (55, {3: "5.5", 11: "20.0", 51: "85.5", 56: "87.3", 111: "96.4"}),
}


def _reference_set(counts, label=""):
    return validate_reference_set([PaperRecord(id=f"p{i}", citations=c) for i, c in enumerate(counts, start=1)], label=label)


@pytest.fixture(scope="module")
def table3(data_dir):
    return read_dataset(data_dir / "table3_orig.csv")


@pytest.fixture(scope="module")
def table4(data_dir):
    return read_dataset(data_dir / "table4_orig.csv")


@pytest.mark.parametrize("column", sorted(TABLE3_COLUMNS))
def test_table3_modifications(data_dir, table3, column):
    """
    Tests the rank scale and P100 column of the large reference set and its four single-citation modifications.
    """
    modified = table3 if column == "table3_orig" else apply(table3, read_perturbation_spec(data_dir / f"{column}.spec"))
    i_max, displayed = TABLE3_COLUMNS[column]
    table = build_unique_table(modified)
    assert table.i_max == i_max
    assert {c: format_fraction(p100(c, table).value) for c in displayed} == displayed
    assert modified.size == 3007


def test_apply_first_modification_of_small_set():
    original = _reference_set([1, 2, 3, 4, 4, 4, 7, 10])
    modified = apply(original, PerturbationSpec.of((CountSelector(citations=1), 1)))
    assert modified.citation_counts() == [2, 2, 3, 4, 4, 4, 7, 10]
    assert build_unique_table(modified).i_max == 4
    assert original.citation_counts() == [1, 2, 3, 4, 4, 4, 7, 10]


def test_apply_resolves_against_the_original_set():
    """
    Tests that a count selector sees the papers of the unchanged set even after another delta moved a paper onto that count.
    """
    original = _reference_set([3, 4, 4])
    modified = apply(original, parse_perturbation_spec("at:3#1 +1\nat:4#2 -1\n"))
    assert modified.citation_counts() == [4, 4, 3]


def test_apply_empty_spec_is_identity(table3):
    assert apply(table3, PerturbationSpec()) == table3


def test_apply_id_selector():
    modified = apply(_reference_set([1, 2]), PerturbationSpec.of((IdSelector(paper_id="p2"), 5)))
    assert modified.paper("p2").citations == 7


def test_apply_unresolved_selector_names_the_line(table3):
    with pytest.raises(SelectorUnresolvedError, match=r"^line 2: .*at:39#1") as excinfo:
        apply(table3, parse_perturbation_spec("at:40#1 -1\nat:39#1 +1\n"))
    assert excinfo.value.line_number == 2
    with pytest.raises(SelectorUnresolvedError, match="id 'missing'"):
        apply(table3, PerturbationSpec.of((IdSelector(paper_id="missing"), 1)))
    with pytest.raises(SelectorUnresolvedError, match="found 3"):
        apply(table3, PerturbationSpec.of((CountSelector(citations=40, ordinal=4), 1)))


def test_apply_rejects_negative_results():
    original = _reference_set([0, 2])
    with pytest.raises(NegativeResultError, match="p1"):
        apply(original, PerturbationSpec.of((CountSelector(citations=2), 1), (CountSelector(citations=0), -1)))
    assert original.citation_counts() == [0, 2]


def test_apply_rejects_overlapping_selectors():
    with pytest.raises(OverlappingSelectorsError, match="p2"):
        apply(_reference_set([1, 2]), PerturbationSpec.of((CountSelector(citations=2), 1), (IdSelector(paper_id="p2"), 1)))


def test_diff_table3_second_modification(data_dir, table3):
    modified = apply(table3, read_perturbation_spec(data_dir / "table3_mod2.spec"))
    report = diff(table3, modified)
    assert report.counts_appeared == (39, 45)
    assert report.counts_vanished == ()
    assert (report.i_max_before, report.i_max_after) == (57, 59)
    assert report.net_citation_delta == 0
    assert report.count_shifts[39].p100_before is None
    assert report.count_shifts[39].delta is None
    assert report.count_shifts[0].delta == 0
    assert report.count_shifts[123].delta == 0


def test_diff_first_author_modification(data_dir, table4):
    """
    Tests the rearrangement of twelve citations that removes ten unique counts and makes the scale coarser.
    """
    modified = apply(table4, read_perturbation_spec(data_dir / "ll1.spec"))
    report = diff(table4, modified)
    assert (report.unique_counts_before, report.unique_counts_after) == (65, 55)
    assert (report.i_max_before, report.i_max_after) == (64, 54)
    assert report.counts_appeared == (61,)
    assert report.counts_vanished == (31, 35, 36, 39, 41, 47, 49, 60, 62, 73, 134)
    assert report.net_citation_delta == 0
    assert report.count_shifts[30].p100_after == Fraction(2900, 54)
    assert format_fraction(report.count_shifts[30].p100_after) == "53.7"
    assert abs(report.count_shifts[30].p100_after - Fraction("45.3") - Fraction("8.4")) < Fraction(1, 20)
    assert set(report.per_author) == {"LB", "LL", "RM"}
    assert report.per_author["LL"].papers == 243


def test_diff_second_author_modification(data_dir, table4):
    modified = apply(table4, read_perturbation_spec(data_dir / "ll2.spec"))
    report = diff(table4, modified)
    assert (report.unique_counts_before, report.unique_counts_after) == (65, 70)
    assert report.counts_appeared == (26, 45, 46, 57, 67)
    assert report.counts_vanished == ()
    assert report.net_citation_delta == 0
    assert report.count_shifts[25].p100_after == Fraction(2500, 69)
    assert abs(report.count_shifts[25].p100_after - Fraction("39.1") + Fraction("2.9")) < Fraction(1, 20)
    assert classify_mechanism(report).scale_change is ScaleChange.COMPRESSION


def test_diff_of_identical_sets(table4):
    report = diff(table4, table4)
    assert report.counts_appeared == report.counts_vanished == ()
    assert all(shift.delta == 0 for shift in report.per_paper.values())
    assert all(shift.delta == 0 for shift in report.per_author.values())
    assert all(shift.relative_percent in (0, None) for shift in report.per_author.values())
    assert classify_mechanism(report).scale_change is ScaleChange.UNCHANGED


def test_diff_per_paper_and_author_shifts():
    original = validate_reference_set(
        [
            PaperRecord(id="a", citations=1, authors={"X"}),
            PaperRecord(id="b", citations=2, authors={"Y"}),
            PaperRecord(id="c", citations=4, authors={"Y"}),
            PaperRecord(id="d", citations=10, authors={"X"}),
        ]
    )
    report = diff(original, apply(original, PerturbationSpec.of((IdSelector(paper_id="a"), 1))))
    shift = report.per_paper["a"]
    assert (shift.citations_before, shift.citations_after) == (1, 2)
    assert (shift.p100_before, shift.p100_after) == (0, 0)
    assert report.per_paper["c"].delta == 50 - Fraction(200, 3)
    assert report.per_author["Y"].mean_before == 50
    assert report.per_author["Y"].mean_after == 25
    assert report.per_author["Y"].relative_percent == -50
    assert report.per_author["X"].relative_percent == 0


def test_relative_change_needs_a_nonzero_mean():
    original = validate_reference_set([PaperRecord(id="a", citations=0, authors={"X"}), PaperRecord(id="b", citations=3), PaperRecord(id="c", citations=5)])
    shift = diff(original, apply(original, PerturbationSpec.of((IdSelector(paper_id="b"), 1)))).per_author["X"]
    assert shift.mean_before == shift.mean_after == 0
    assert shift.relative_percent is None


def test_diff_rejects_mismatched_ids():
    with pytest.raises(MismatchedIdsError, match="p3"):
        diff(_reference_set([1, 2]), _reference_set([1, 2, 3]))


def test_classify_first_modification(data_dir, table3):
    report = diff(table3, apply(table3, read_perturbation_spec(data_dir / "table3_mod1.spec")))
    mechanism = classify_mechanism(report)
    assert mechanism.tags == {39: Mechanism.GAP_FILLED}
    assert mechanism.scale_change is ScaleChange.COMPRESSION
    assert mechanism.summary() == "compression, i_max 57 → 58 (gap-filled: 39)"


def test_classify_merge_into_a_ranked_count(table3):
    """
    Tests that raising the single paper at 67 citations onto the ranked count 68 removes a unique count.
    """
    report = diff(table3, apply(table3, PerturbationSpec.of((CountSelector(citations=67), 1))))
    mechanism = classify_mechanism(report)
    assert mechanism.tags == {67: Mechanism.GAP_CREATED}
    assert mechanism.scale_change is ScaleChange.DILATION
    assert (mechanism.i_max_before, mechanism.i_max_after) == (57, 56)


def test_classify_emptied_count():
    original = _reference_set([0, 3, 5])
    mechanism = classify_mechanism(diff(original, apply(original, PerturbationSpec.of((CountSelector(citations=3), 1)))))
    assert mechanism.tags == {3: Mechanism.EMPTIED, 4: Mechanism.GAP_FILLED}
    assert mechanism.scale_change is ScaleChange.UNCHANGED
    assert mechanism.counts_tagged(Mechanism.EMPTIED) == [3]


if __name__ == "__main__":
    pytest.main([__file__])
