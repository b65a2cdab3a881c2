import pytest

from vtypes.cantor_core import (
    common_refinement,
    complete_antichain,
    format_address,
    incomparable,
    is_antichain,
    is_complete,
    is_prefix,
    make_partition,
    parse_address,
    refine_to_depth,
    split_cone,
    words,
)
from vtypes.utils.errors import DepthTooSmall, IncompletePartition, NotIncomparable, VTypesError
from vtypes.utils.sampling import random_address, random_antichain, random_partition


def test_parse_and_format_empty_address():
    assert parse_address("e") == ""
    assert parse_address("ε") == ""
    assert parse_address(" 0110 ") == "0110"
    assert format_address("") == "e"
    with pytest.raises(VTypesError):
        parse_address("012")


def test_is_prefix():
    assert is_prefix("", "010")
    assert is_prefix("01", "010")
    assert not is_prefix("01", "001")


def test_incomparable():
    assert incomparable("0", "1")
    assert not incomparable("0", "01")
    assert incomparable("010", "011")
    assert not incomparable("", "1")


def test_exactly_one_relation_holds(rng):
    for _ in range(500):
        a, b = random_address(rng, 6), random_address(rng, 6)
        relations = [a == b, a != b and is_prefix(a, b), a != b and is_prefix(b, a), incomparable(a, b)]
        assert sum(relations) == 1


def test_is_complete():
    assert is_complete(["0", "10", "11"])
    assert not is_complete(["0", "10"])
    assert is_complete([""])
    assert not is_complete(["0", "01", "1"])
    assert not is_complete([])


def test_is_complete_matches_covering_count(rng):
    for _ in range(300):
        cones = random_antichain(rng, 7)
        depth = max(len(a) for a in cones) + 1
        covered = [w for w in words(depth) if any(w.startswith(a) for a in cones)]
        assert is_complete(cones) == (len(covered) == 2 ** depth)


def test_make_partition_errors():
    assert make_partition(["11", "0", "10"]) == ("0", "10", "11")
    with pytest.raises(IncompletePartition):
        make_partition(["0", "10"])
    with pytest.raises(NotIncomparable):
        make_partition(["0", "01", "1"])


def test_refine_to_depth():
    assert refine_to_depth(("",), 2) == ("00", "01", "10", "11")
    assert refine_to_depth(("0", "1"), 1) == ("0", "1")
    assert refine_to_depth(("0", "10", "11"), 2) == ("00", "01", "10", "11")
    with pytest.raises(DepthTooSmall):
        refine_to_depth(("0", "10", "11"), 1)


def test_refinement_keeps_completeness(rng):
    for _ in range(200):
        p = random_partition(rng, int(rng.integers(1, 8)))
        depth = max(len(a) for a in p) + int(rng.integers(0, 3))
        refined = refine_to_depth(p, depth)
        assert is_complete(refined)
        assert len(refined) == 2 ** depth


def test_common_refinement():
    assert common_refinement(("0", "1"), ("00", "01", "1")) == ("00", "01", "1")
    assert common_refinement(("0", "1"), ("0", "1")) == ("0", "1")
    assert common_refinement(("00", "01", "1"), ("0", "10", "11")) == ("00", "01", "10", "11")


def test_common_refinement_refines_both(rng):
    for _ in range(200):
        p = random_partition(rng, int(rng.integers(1, 7)))
        q = random_partition(rng, int(rng.integers(1, 7)))
        r = common_refinement(p, q)
        assert r == common_refinement(q, p)
        assert is_complete(r)
        for a in r:
            assert any(a.startswith(b) for b in p)
            assert any(a.startswith(b) for b in q)


def test_complete_antichain():
    assert complete_antichain(["00", "11"]) == ("01", "10")
    assert complete_antichain(["0"]) == ("1",)
    assert complete_antichain([""]) == ()
    assert complete_antichain(["00", "0100"]) == ("0101", "011", "1")


def test_complete_antichain_completes(rng):
    for _ in range(200):
        cones = random_antichain(rng, 6)
        extra = complete_antichain(cones)
        assert is_antichain(list(cones) + list(extra))
        assert is_complete(list(cones) + list(extra))


def test_split_cone():
    assert split_cone(("0", "1"), "1") == ("0", "10", "11")
