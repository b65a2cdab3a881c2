import pytest
from oracles import types_agree

from vtypes.cantor_core import complete_antichain, incomparable, words
from vtypes.classification import classify, stable_depth
from vtypes.gallery import element_text, named_diagram
from vtypes.membership import (
    fix_transpositions_at_depth,
    in_fix,
    in_stab,
    induced_class_permutation,
    matched_decomposition,
    non_stabilizing_transposition,
    witness_conjugator,
)
from vtypes.type_systems import type_of
from vtypes.utils.errors import (
    NotInStab,
    PreconditionViolated,
    SearchExhausted,
    TooFewLabels,
    TypeMismatch,
)
from vtypes.utils.sampling import random_element, random_product
from vtypes.v_elements import compose, identity, inverse, parse_element, partial_apply, transposition


def swap(a, b):
    return transposition(a, b)


def test_in_fix_examples(slopefour, universal):
    assert in_fix(slopefour, swap("00", "01"))
    assert not in_fix(slopefour, swap("0", "10"))
    assert in_fix(slopefour, identity())
    assert in_fix(universal, swap("0", "10"))


def test_in_fix_matches_pointwise_types(rng):
    for name in ("slopefour", "stabzero", "atomicmultinuclear"):
        t = named_diagram(name)
        generators = fix_transpositions_at_depth(t, 3)
        for i in range(500):
            if i % 2:
                g = random_product(rng, generators, int(rng.integers(1, 5)))
            else:
                g = random_element(rng)
            assert in_fix(t, g) == types_agree(t, g, g.depth + 3)


def test_deep_mode_agrees(rng, simplemaximal):
    for _ in range(100):
        g = random_element(rng)
        assert in_fix(simplemaximal, g, deep=True) == in_fix(simplemaximal, g)


def test_in_stab_examples(slopefour, multinuclear):
    assert not in_stab(slopefour, swap("0", "10")).member
    assert in_stab(slopefour, swap("0", "1")).member
    swap_nuclei = parse_element(element_text("multinuclear_swap"))
    verdict = in_stab(multinuclear, swap_nuclei)
    assert verdict.member
    assert not in_fix(multinuclear, swap_nuclei)


def test_odd_shift_leaves_the_stabilizer(slopefour):
    shift = parse_element(element_text("slopefour_shift"))
    verdict = in_stab(slopefour, shift)
    assert not verdict.member
    assert not verdict.relation.functional
    with pytest.raises(NotInStab):
        induced_class_permutation(slopefour, shift)


def test_induced_class_permutation(slopefour, multinuclear):
    assert induced_class_permutation(slopefour, swap("00", "01")).is_identity
    assert str(induced_class_permutation(slopefour, swap("00", "01"))) == "id"
    swap_nuclei = parse_element(element_text("multinuclear_swap"))
    permutation = induced_class_permutation(multinuclear, swap_nuclei)
    assert permutation.cycles() == [("R", "S")]
    assert str(permutation) == "(R S)"


def test_fix_is_contained_in_stab(rng):
    for name in ("slopefour", "stabzero", "atomicmultinuclear", "simplemaximal"):
        t = named_diagram(name)
        generators = fix_transpositions_at_depth(t, 2)
        for _ in range(50):
            g = random_product(rng, generators, int(rng.integers(0, 5)))
            assert in_fix(t, g)
            assert in_stab(t, g).member


def test_fix_and_stab_are_closed(rng, multinuclear):
    fix_generators = fix_transpositions_at_depth(multinuclear, 3)
    stab_generators = fix_generators + [swap("10", "11")]
    for _ in range(200):
        g = random_product(rng, fix_generators, 3)
        h = random_product(rng, fix_generators, 3)
        assert in_fix(multinuclear, compose(g, h))
        assert in_fix(multinuclear, inverse(g))
        s = random_product(rng, stab_generators, 4)
        assert in_stab(multinuclear, s).member
        assert in_stab(multinuclear, inverse(s)).member
        # Fix is normal in Stab
        assert in_fix(multinuclear, compose(compose(inverse(s), g), s))


def test_fix_transpositions_at_depth(slopefour, stabzero, universal):
    assert fix_transpositions_at_depth(slopefour, 1) == [swap("0", "1")]
    assert fix_transpositions_at_depth(stabzero, 2) == [swap("01", "10"), swap("01", "11"), swap("10", "11")]
    assert fix_transpositions_at_depth(universal, 1) == [swap("0", "1")]
    with pytest.raises(PreconditionViolated):
        fix_transpositions_at_depth(slopefour, 0)


def test_non_stabilizing_transposition(universal):
    for name in ("slopefour", "stabzero", "atomicmultinuclear", "branching", "simplemaximal", "higman5"):
        t = named_diagram(name)
        g = non_stabilizing_transposition(t)
        assert not in_stab(t, g).member
    assert non_stabilizing_transposition(named_diagram("slopefour")) == swap("1", "00")
    with pytest.raises(TooFewLabels):
        non_stabilizing_transposition(universal)


def test_matched_decomposition_examples(slopefour):
    matched = matched_decomposition(slopefour, ["00", "01"], ["0"])
    assert matched.pairs == (("00", "00"), ("01", "01"))
    assert matched.carets == 1
    same = matched_decomposition(slopefour, ["0", "10"], ["0", "10"])
    assert sorted(same.pairs) == [("0", "0"), ("10", "10")]
    assert same.carets == 0
    with pytest.raises(TypeMismatch):
        matched_decomposition(slopefour, ["0"], ["00"])


def test_matched_decomposition_respects_budget(slopefour):
    with pytest.raises(SearchExhausted) as info:
        matched_decomposition(slopefour, ["01", "10"], ["0101", "011", "1"], budget=0)
    assert info.value.exit_code == 3
    matched = matched_decomposition(slopefour, ["01", "10"], ["0101", "011", "1"])
    for a, b in matched.pairs:
        assert type_of(slopefour, a) == type_of(slopefour, b)


def test_matched_decomposition_pairs_partition_both_sides(simplemaximal):
    source = complete_antichain(["0000", "1111"])
    target = complete_antichain(["0011", "1100"])
    matched = matched_decomposition(simplemaximal, source, target)
    left = [a for a, _ in matched.pairs]
    right = [b for _, b in matched.pairs]
    for side, cones in ((left, source), (right, target)):
        for a in side:
            assert any(a.startswith(c) for c in cones)
        assert sum(2.0 ** -len(a) for a in side) == sum(2.0 ** -len(c) for c in cones)
    for a, b in matched.pairs:
        assert type_of(simplemaximal, a) == type_of(simplemaximal, b)


def test_witness_conjugator_slopefour(slopefour):
    c = classify(slopefour)
    g = witness_conjugator(slopefour, c, "00", "01", "10", "11")
    assert g.pairs == (("00", "01"), ("01", "00"), ("10", "11"), ("11", "10"))


def test_witness_conjugator_needs_carets(slopefour):
    c = classify(slopefour)
    g = witness_conjugator(slopefour, c, "00", "00", "11", "0100")
    assert partial_apply(g, "00") == "00"
    assert partial_apply(g, "11") == "0100"
    assert in_fix(slopefour, g)


def test_witness_conjugator_preconditions(slopefour, stabzero):
    c = classify(slopefour)
    with pytest.raises(PreconditionViolated):
        witness_conjugator(slopefour, c, "00", "000", "10", "11")
    with pytest.raises(PreconditionViolated):
        witness_conjugator(slopefour, c, "0", "1", "10", "11")
    with pytest.raises(PreconditionViolated):
        witness_conjugator(slopefour, c, "00", "01", "00", "11")
    with pytest.raises(PreconditionViolated):
        witness_conjugator(stabzero, classify(stabzero), "00", "00", "11", "11")


@pytest.mark.parametrize("name, extra", [("slopefour", 2), ("simplemaximal", 2), ("branching", 1)])
def test_witness_conjugator_random_prescriptions(name, extra, rng):
    t = named_diagram(name)
    c = classify(t)
    level = words(stable_depth(c, t) + extra)
    by_type = {}
    for a in level:
        by_type.setdefault(type_of(t, a), []).append(a)
    checked = 0
    for _ in range(10_000):
        if checked == 100:
            break
        alpha, beta = (level[i] for i in rng.choice(len(level), size=2, replace=False))
        same_alpha = by_type[type_of(t, alpha)]
        alpha2 = same_alpha[int(rng.integers(len(same_alpha)))]
        choices = [b for b in by_type[type_of(t, beta)] if b != alpha2]
        if not choices:
            continue
        beta2 = choices[int(rng.integers(len(choices)))]
        assert incomparable(alpha, beta) and incomparable(alpha2, beta2)
        g = witness_conjugator(t, c, alpha, alpha2, beta, beta2)
        assert in_fix(t, g)
        assert partial_apply(g, alpha) == alpha2
        assert partial_apply(g, beta) == beta2
        checked += 1
    assert checked == 100


def test_branching_witness(branching):
    c = classify(branching)
    assert c.branching
    depth = stable_depth(c, branching) + 1
    alpha, beta = "1" * depth, "0" * depth
    beta2 = next(a for a in words(depth) if a not in (alpha, beta) and type_of(branching, a) == type_of(branching, beta))
    g = witness_conjugator(branching, c, alpha, alpha, beta, beta2)
    assert partial_apply(g, alpha) == alpha
    assert partial_apply(g, beta) == beta2
    assert in_fix(branching, g)


def test_slopefour_stab_equals_fix(slopefour, rng):
    for _ in range(500):
        g = random_element(rng)
        assert in_stab(slopefour, g).member == in_fix(slopefour, g)
