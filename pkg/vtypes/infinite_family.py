"""The infinite nuclear family built from a strictly increasing sequence.

Type ``n`` (``n >= 0``) has 0-child ``n - 1`` (``0`` for ``n == 0``) and
1-child ``n + a[n]``.  Sequences are finite prefixes, optionally extended by
an arithmetic tail.
"""
from collections import deque
from dataclasses import dataclass

from vtypes.classification import TypeGraph
from vtypes.utils.errors import PreconditionViolated, SequenceExhausted, VTypesError


@dataclass(frozen=True)
class IncreasingSeq:
    values: tuple
    tail_step: int = None

    def __post_init__(self):
        if not self.values:
            raise VTypesError("sequence needs at least one term")
        if self.values[0] < 1 or any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise VTypesError("sequence must be strictly increasing and positive", values=list(self.values))
        if self.tail_step is not None and self.tail_step < 1:
            raise VTypesError("tail step must be at least 1", tail_step=self.tail_step)

    @classmethod
    def parse(cls, text, tail_step=None):
        try:
            values = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
        except ValueError:
            raise VTypesError(f"cannot read sequence {text!r}") from None
        return cls(values, tail_step)

    def __getitem__(self, n):
        if n < len(self.values):
            return self.values[n]
        if self.tail_step is None:
            raise SequenceExhausted(n, len(self.values))
        return self.values[-1] + self.tail_step * (n - len(self.values) + 1)


def family_child(a, n, bit):
    if bit == "0":
        return max(n - 1, 0)
    return n + a[n]


def family_type_of(a, address, start=0):
    n = start
    for bit in address:
        n = family_child(a, n, bit)
    return n


@dataclass(frozen=True)
class FamilyWitness:
    m: int
    r: int
    gaps: tuple  # j_n - i_n for n = 0..m

    @property
    def word(self):
        return "1" * self.m + "0" * self.r


def identification_witness(a, i, j, k):
    """Least ``m`` with ``j_m - i_m >= k`` and ``r = j_m - k``.

    Reading ``1^m 0^r`` takes type ``i`` to type 0 and type ``j`` to type ``k``.
    """
    if not 0 <= i < j:
        raise PreconditionViolated(f"need 0 <= i < j, got i={i}, j={j}")
    if k < 1:
        raise PreconditionViolated(f"need k >= 1, got {k}")
    gaps = [j - i]
    m = 0
    while j - i < k:
        i, j = i + a[i], j + a[j]
        gaps.append(j - i)
        m += 1
    return FamilyWitness(m, j - k, tuple(gaps))


@dataclass(frozen=True)
class FamilyTruncation:
    nodes: tuple
    edges: tuple  # (source, bit, target)
    open: tuple  # nodes whose children were not expanded

    def to_type_graph(self):
        return TypeGraph(tuple(f"P{n}" for n in self.nodes), tuple((f"P{s}", b, f"P{d}") for s, b, d in self.edges))


def truncated_diagram(a, depth):
    """Types reachable from type 0 within ``depth`` steps; the last layer is left open."""
    first_seen = {0: 0}
    order = [0]
    edges = []
    queue = deque([0])
    while queue:
        n = queue.popleft()
        if first_seen[n] >= depth:
            continue
        for bit in "01":
            c = family_child(a, n, bit)
            edges.append((n, bit, c))
            if c not in first_seen:
                first_seen[c] = first_seen[n] + 1
                order.append(c)
                queue.append(c)
    opened = tuple(n for n in order if first_seen[n] >= depth)
    return FamilyTruncation(tuple(sorted(order)), tuple(edges), tuple(sorted(opened)))
