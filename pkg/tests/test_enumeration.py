import pandas as pd
import pytest
from oracles import all_canonical_keys

from vtypes.classification import classify, stable_child_closed_subsets
from vtypes.enumeration import (
    CENSUS_COLUMNS,
    census,
    census_row,
    enumerate_diagrams,
    is_allowed_simple_kind,
    is_simple_brute_force,
    stable_subset_configuration_ok,
    verify_classification,
    verify_stable_subset_counts,
    write_census_csv,
)
from vtypes.gallery import named_diagram
from vtypes.type_systems import canonical_form, canonical_key, is_simple


def test_one_label():
    systems = list(enumerate_diagrams(1))
    assert len(systems) == 1
    assert canonical_form(systems[0]) == canonical_form(named_diagram("universal"))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_generation_matches_exhaustive_search(k):
    generated = [canonical_key(t) for t in enumerate_diagrams(k) if len(t.labels) == k]
    assert len(generated) == len(set(generated))
    assert set(generated) == all_canonical_keys(k)


def test_generated_diagrams_are_canonical():
    for t in enumerate_diagrams(3):
        assert t.reduced_certificate
        # labels already appear in breadth-first order
        assert canonical_key(t) == tuple((t.labels.index(a), t.labels.index(b)) for a, b in t.diagram.edges)


def test_gallery_systems_appear():
    forms = {canonical_form(t) for t in enumerate_diagrams(3)}
    for name in ("universal", "stabzero", "slopefour", "infiniteabel", "branching"):
        assert canonical_form(named_diagram(name)) in forms


def test_out_of_range():
    with pytest.raises(ValueError):
        list(enumerate_diagrams(0))
    with pytest.raises(ValueError):
        census(8)


def test_classification_theorem_on_small_systems():
    report = verify_classification(3)
    assert report.ok
    assert report.simple == sum(report.counts.values())
    assert report.to_dict()["violations"] == []


def test_four_labels_against_brute_force():
    simple = 0
    for t in enumerate_diagrams(4):
        if len(t.labels) < 2:
            continue
        verdict = is_simple(t).simple
        assert verdict == is_simple_brute_force(t)
        if verdict:
            simple += 1
            assert is_allowed_simple_kind(classify(t))
            assert stable_subset_configuration_ok(stable_child_closed_subsets(t))
    assert simple > 0


def test_stable_subset_counts(stabzero, slopefour):
    assert len(stable_child_closed_subsets(slopefour)) == 1
    subsets = stable_child_closed_subsets(stabzero)
    assert len(subsets) == 2 and set(subsets[0]) < set(subsets[1])
    report = verify_stable_subset_counts(3)
    assert report.ok
    assert set(report.counts) <= {1, 2, 3}


def test_stable_subset_configurations():
    assert stable_subset_configuration_ok([("A",)])
    assert stable_subset_configuration_ok([("A",), ("A", "B")])
    assert stable_subset_configuration_ok([("A",), ("B",), ("A", "B")])
    assert not stable_subset_configuration_ok([("A",), ("B",)])
    assert not stable_subset_configuration_ok([("A",), ("B",), ("C",), ("A", "B", "C")])


def test_census_row(simplemaximal, stabzero):
    row = census_row(simplemaximal)
    assert row.simple
    assert row.kind == "Nuclear"
    assert row.invariant_factors == [3, 3]
    row = census_row(stabzero)
    assert row.kind == "QuasinuclearAtomic{branching:false}"
    assert row.invariant_factors is None


def test_census_csv(tmp_path):
    rows = census(2, workers=1)
    assert [r.labels for r in rows] == sorted(r.labels for r in rows)
    path = tmp_path / "census.csv"
    write_census_csv(rows, path)
    frame = pd.read_csv(path)
    assert list(frame.columns) == CENSUS_COLUMNS
    assert len(frame) == len(rows) == len(list(enumerate_diagrams(2)))


def test_verification_reuses_census_rows(monkeypatch):
    rows = census(3, workers=1)
    expected = (verify_classification(3).to_dict(), verify_stable_subset_counts(3).to_dict())

    def no_second_census(*args, **kwargs):
        raise AssertionError("census recomputed")

    monkeypatch.setattr("vtypes.enumeration.census", no_second_census)
    assert verify_classification(3, rows=rows).to_dict() == expected[0]
    assert verify_stable_subset_counts(3, rows=rows).to_dict() == expected[1]


def test_census_rows_carry_stable_subsets(stabzero):
    assert census_row(stabzero).stable_subsets == [list(s) for s in stable_child_closed_subsets(stabzero)]
    violating = census_row(stabzero)
    violating.simple, violating.stable_subsets = True, [["A"], ["B"]]
    report = verify_stable_subset_counts(1, rows=[violating])
    assert not report.ok
    assert report.counts == {2: 1}
