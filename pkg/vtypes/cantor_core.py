"""Addresses, cones and cone partitions of Cantor space.

An address is a plain ``str`` over ``"0"`` and ``"1"``; the empty string is
the root address and serializes as ``"e"``.  Antichains and partitions are
tuples of addresses kept in sorted order so that equal partitions compare
equal.
"""
import itertools

from vtypes.utils.errors import DepthTooSmall, IncompletePartition, NotIncomparable, VTypesError

EMPTY_TOKEN = "e"


def parse_address(token):
    """Read an address token; ``e`` (or an empty token) is the empty word."""
    token = token.strip()
    if token in ("", EMPTY_TOKEN, "ε"):
        return ""
    if set(token) - {"0", "1"}:
        raise VTypesError(f"address {token!r} contains symbols other than 0 and 1", token=token)
    return token


def format_address(a):
    return a if a else EMPTY_TOKEN


def children(a):
    return a + "0", a + "1"


def is_prefix(a, b):
    return b.startswith(a)


def incomparable(a, b):
    return not (b.startswith(a) or a.startswith(b))


def words(length):
    """All addresses of the given length in lexicographic order."""
    return ["".join(bits) for bits in itertools.product("01", repeat=length)]


def is_antichain(addresses):
    addresses = sorted(addresses)
    # after sorting, a prefix sits directly before some extension of it
    for a, b in zip(addresses, addresses[1:]):
        if b.startswith(a):
            return False
    return True


def check_antichain(addresses):
    addresses = sorted(addresses)
    for a, b in zip(addresses, addresses[1:]):
        if b.startswith(a):
            raise NotIncomparable(a, b)
    return tuple(addresses)


def is_complete(addresses):
    """True iff the cones are disjoint and cover Cantor space (Kraft equality)."""
    if not addresses or not is_antichain(addresses):
        return False
    depth = max(len(a) for a in addresses)
    return sum(2 ** (depth - len(a)) for a in addresses) == 2 ** depth


def make_partition(addresses):
    """Validate and sort a complete antichain."""
    addresses = tuple(sorted(addresses))
    if len(set(addresses)) != len(addresses):
        raise IncompletePartition(addresses)
    check_antichain(addresses)
    if not is_complete(addresses):
        raise IncompletePartition(addresses)
    return addresses


def max_depth(addresses):
    return max((len(a) for a in addresses), default=0)


def refine_to_depth(partition, depth):
    needed = max_depth(partition)
    if depth < needed:
        raise DepthTooSmall(depth, needed)
    refined = [a + tail for a in partition for tail in words(depth - len(a))]
    return tuple(sorted(refined))


def common_refinement(p, q):
    """Coarsest partition refining both ``p`` and ``q``."""
    refined = set()
    for a in p:
        for b in q:
            if b.startswith(a):
                refined.add(b)
            elif a.startswith(b):
                refined.add(a)
    return tuple(sorted(refined))


def complete_antichain(addresses):
    """Fewest extra cones that, together with ``addresses``, partition Cantor space.

    Returns only the extra cones.
    """
    wanted = check_antichain(addresses)
    extra = []
    stack = [""]
    while stack:
        node = stack.pop()
        if node in wanted:
            continue
        if any(a.startswith(node) for a in wanted):
            stack.extend(reversed(children(node)))
        else:
            extra.append(node)
    return tuple(sorted(extra))


def split_cone(cones, a):
    """Replace cone ``a`` by its two children."""
    rest = [c for c in cones if c != a]
    return tuple(sorted(rest + list(children(a))))
