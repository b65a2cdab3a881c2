"""Elements of Thompson's group V as prefix substitution maps."""
from dataclasses import dataclass

from vtypes.cantor_core import (
    check_antichain,
    complete_antichain,
    format_address,
    make_partition,
    max_depth,
    parse_address,
)
from vtypes.utils.errors import ElementSyntaxError, IncompletePartition, NotIncomparable, VTypesError


@dataclass(frozen=True)
class PrefixMap:
    """Bijection between two cone partitions, stored as (domain, range) pairs sorted by domain."""

    pairs: tuple
    normalized: bool = False

    @property
    def domain(self):
        return tuple(a for a, _ in self.pairs)

    @property
    def range(self):
        return tuple(b for _, b in self.pairs)

    @property
    def depth(self):
        return max(max_depth(self.domain), max_depth(self.range))

    def as_dict(self):
        return dict(self.pairs)

    def __str__(self):
        return "{" + ", ".join(f"{format_address(a)}↦{format_address(b)}" for a, b in self.pairs) + "}"


def prefix_map(pairs):
    """Build a validated, normalized element from (domain, range) pairs."""
    pairs = [(a, b) for a, b in pairs]
    domain = [a for a, _ in pairs]
    rng = [b for _, b in pairs]
    make_partition(domain)
    make_partition(rng)
    return normalize(PrefixMap(tuple(sorted(pairs))))


def identity():
    return PrefixMap((("", ""),), normalized=True)


def normalize(g):
    """Merge sibling carets until none are left."""
    table = dict(g.pairs)
    merged = True
    while merged:
        merged = False
        for a in sorted(table):
            if not a.endswith("0"):
                continue
            parent = a[:-1]
            sibling = parent + "1"
            if sibling not in table:
                continue
            b0, b1 = table[a], table[sibling]
            if b0.endswith("0") and b1 == b0[:-1] + "1":
                del table[a]
                del table[sibling]
                table[parent] = b0[:-1]
                merged = True
                break
    return PrefixMap(tuple(sorted(table.items())), normalized=True)


def compose(g, h):
    """Apply ``g`` first, then ``h``."""
    pairs = []
    for a, b in g.pairs:
        for c, d in h.pairs:
            if c.startswith(b):
                # h's domain cone sits inside g's range cone
                pairs.append((a + c[len(b):], d))
            elif b.startswith(c):
                pairs.append((a, d + b[len(c):]))
    return normalize(PrefixMap(tuple(sorted(pairs))))


def inverse(g):
    return normalize(PrefixMap(tuple(sorted((b, a) for a, b in g.pairs))))


def partial_apply(g, a):
    """Image of address ``a``, or ``None`` when ``a`` lies strictly above the domain cones."""
    for alpha, beta in g.pairs:
        if a.startswith(alpha):
            return beta + a[len(alpha):]
    return None


def is_identity(g):
    return normalize(g).pairs == (("", ""),)


def transposition(a, b):
    """Swap cones ``a`` and ``b``, fixing the rest of Cantor space."""
    if a == b or a.startswith(b) or b.startswith(a):
        raise NotIncomparable(a, b)
    rest = complete_antichain([a, b])
    pairs = [(a, b), (b, a)] + [(c, c) for c in rest]
    return normalize(PrefixMap(tuple(sorted(pairs))))


def from_cycles(cycles):
    """Permutation of cones given in disjoint cycle notation."""
    moved = [a for cycle in cycles for a in cycle]
    if len(set(moved)) != len(moved):
        duplicate = next(a for a in moved if moved.count(a) > 1)
        raise NotIncomparable(duplicate, duplicate)
    check_antichain(moved)
    pairs = []
    for cycle in cycles:
        for i, a in enumerate(cycle):
            pairs.append((a, cycle[(i + 1) % len(cycle)]))
    pairs.extend((c, c) for c in complete_antichain(moved))
    return normalize(PrefixMap(tuple(sorted(pairs))))


def parse_element(text):
    """Read the ``.vel`` format: one ``DOMAIN -> RANGE`` pair per line."""
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("->")
        if len(parts) != 2:
            raise ElementSyntaxError(line_no, raw)
        try:
            pairs.append((parse_address(parts[0]), parse_address(parts[1])))
        except VTypesError:
            raise ElementSyntaxError(line_no, raw, "bad address") from None
    if not pairs:
        raise ElementSyntaxError(0, "", "no pairs")
    try:
        return prefix_map(pairs)
    except (IncompletePartition, NotIncomparable) as e:
        raise ElementSyntaxError(0, "", e.message) from None


def format_element(g):
    return "\n".join(f"{format_address(a)} -> {format_address(b)}" for a, b in g.pairs) + "\n"
