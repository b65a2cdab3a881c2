"""Seeded random objects for property checks."""
import numpy as np

from vtypes.cantor_core import split_cone
from vtypes.v_elements import PrefixMap, compose, identity, normalize


def make_rng(seed=None):
    return np.random.default_rng(seed)


def random_address(rng, max_length):
    length = int(rng.integers(0, max_length + 1))
    return "".join(rng.choice(["0", "1"], size=length)) if length else ""


def random_partition(rng, leaves):
    """Complete antichain with ``leaves`` cones grown by random splits from the root."""
    cones = ("",)
    while len(cones) < leaves:
        cones = split_cone(cones, cones[int(rng.integers(len(cones)))])
    return cones


def random_element(rng, max_leaves=6):
    leaves = int(rng.integers(1, max_leaves + 1))
    domain = random_partition(rng, leaves)
    target = random_partition(rng, leaves)
    image = [target[i] for i in rng.permutation(leaves)]
    return normalize(PrefixMap(tuple(sorted(zip(domain, image)))))


def random_antichain(rng, max_leaves=5):
    """Random non-empty subset of a random partition."""
    cones = random_partition(rng, int(rng.integers(1, max_leaves + 1)))
    keep = [c for c in cones if rng.random() < 0.6]
    return tuple(keep) if keep else (cones[0],)


def random_product(rng, generators, length):
    """Product of ``length`` generators picked uniformly (identity when empty)."""
    g = identity()
    for _ in range(length):
        if not generators:
            break
        g = compose(g, generators[int(rng.integers(len(generators)))])
    return g


def random_int_matrix(rng, rows, cols, low=-9, high=9):
    return [[int(x) for x in row] for row in rng.integers(low, high + 1, size=(rows, cols))]
