import pytest
from oracles import action, same_element

from vtypes.utils.errors import ElementSyntaxError, NotIncomparable
from vtypes.utils.sampling import random_element
from vtypes.v_elements import (
    compose,
    format_element,
    from_cycles,
    identity,
    inverse,
    is_identity,
    normalize,
    parse_element,
    partial_apply,
    prefix_map,
    transposition,
)


def swap(a, b):
    return transposition(a, b)


def test_normalize_collapses_identity():
    g = prefix_map([("00", "00"), ("01", "01"), ("1", "1")])
    assert g.pairs == (("", ""),)
    assert is_identity(g)


def test_normalize_keeps_minimal_maps():
    g = prefix_map([("0", "10"), ("10", "0"), ("11", "11")])
    assert g.pairs == (("0", "10"), ("10", "0"), ("11", "11"))


def test_normalize_merges_a_caret():
    g = prefix_map([("00", "10"), ("01", "11"), ("1", "0")])
    assert g.pairs == (("0", "1"), ("1", "0"))


def test_compose_examples():
    assert is_identity(compose(swap("0", "1"), swap("0", "1")))
    g = prefix_map([("0", "10"), ("10", "0"), ("11", "11")])
    assert compose(g, identity()) == normalize(g)
    # apply swap(00,01), then swap(01,1)
    h = compose(swap("00", "01"), swap("01", "1"))
    assert h.pairs == (("00", "1"), ("01", "00"), ("1", "01"))


def test_compose_matches_pointwise_action(rng):
    for _ in range(200):
        g, h = random_element(rng), random_element(rng)
        gh = compose(g, h)
        length = g.depth + h.depth + 1
        for w, image in action(g, length).items():
            assert partial_apply(gh, w) == partial_apply(h, image)


def test_inverse_examples():
    assert inverse(identity()) == identity()
    assert inverse(swap("0", "10")) == swap("0", "10")
    g = prefix_map([("0", "00"), ("10", "01"), ("11", "1")])
    assert inverse(g).pairs == (("00", "0"), ("01", "10"), ("1", "11"))


def test_group_laws(rng):
    e = identity()
    for _ in range(1000):
        f, g, h = random_element(rng), random_element(rng), random_element(rng)
        assert compose(compose(f, g), h) == compose(f, compose(g, h))
        assert compose(g, inverse(g)) == e
        assert compose(inverse(g), g) == e
        assert compose(g, e) == normalize(g)
        assert compose(e, g) == normalize(g)


def test_normal_form_is_unique(rng):
    for _ in range(200):
        g = random_element(rng)
        h = compose(compose(g, swap("0", "1")), swap("0", "1"))
        assert same_element(g, h)
        assert g == h


def test_partial_apply():
    assert partial_apply(identity(), "010") == "010"
    assert partial_apply(swap("0", "10"), "011") == "1011"
    assert partial_apply(swap("0", "10"), "") is None


def test_partial_action_law(rng):
    for _ in range(300):
        g, h = random_element(rng), random_element(rng)
        for w in action(g, g.depth).keys():
            image = partial_apply(g, w)
            if image is None or partial_apply(h, image) is None:
                continue
            assert partial_apply(compose(g, h), w) == partial_apply(h, image)


def test_transposition():
    assert swap("0", "1").pairs == (("0", "1"), ("1", "0"))
    assert swap("00", "01").pairs == (("00", "01"), ("01", "00"), ("1", "1"))
    assert swap("0", "10").pairs == (("0", "10"), ("10", "0"), ("11", "11"))
    with pytest.raises(NotIncomparable):
        swap("0", "01")
    with pytest.raises(NotIncomparable):
        swap("1", "1")


def test_from_cycles():
    assert from_cycles([["0", "1"]]) == swap("0", "1")
    three = from_cycles([["00", "01", "10"]])
    assert three.as_dict() == {"00": "01", "01": "10", "10": "00", "11": "11"}
    double = from_cycles([["00", "01"], ["10", "11"]])
    assert double == compose(swap("00", "01"), swap("10", "11"))
    with pytest.raises(NotIncomparable):
        from_cycles([["0", "01"]])


def test_parse_element():
    g = parse_element("# a swap\n0 -> 10\n10 -> 0\n11 -> 11\n")
    assert g == swap("0", "10")
    assert parse_element(format_element(g)) == g
    assert parse_element("e -> e\n") == identity()


@pytest.mark.parametrize("text", ["0 -> 1\n", "0 1\n", "0 -> 2\n1 -> 0\n", "", "0 -> 0\n0 -> 1\n"])
def test_parse_element_rejects(text):
    with pytest.raises(ElementSyntaxError):
        parse_element(text)
