"""Type graphs and the nuclear / multinuclear / quasinuclear classification."""
import enum
import logging
from dataclasses import dataclass, field, replace

import graphviz
import networkx as nx

from vtypes.cantor_core import incomparable, words
from vtypes.type_systems import cycle_labels, label_graph, type_of
from vtypes.utils.errors import NonPrimitiveCycle, NotApplicable

logger = logging.getLogger(__name__)


class Kind(str, enum.Enum):
    NUCLEAR = "Nuclear"
    MULTINUCLEAR = "Multinuclear"
    QUASINUCLEAR_ATOMIC = "QuasinuclearAtomic"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class TypeGraph:
    vertices: tuple
    edges: tuple  # (source, bit, target)

    def to_networkx(self):
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for source, bit, target in self.edges:
            g.add_edge(source, target, label=bit)
        return g


@dataclass(frozen=True)
class RationalPoint:
    """The infinite word ``preperiod`` followed by ``period`` repeated forever."""

    preperiod: str
    period: str

    def prefix(self, n):
        word = self.preperiod
        while len(word) < n:
            word += self.period
        return word[:n]

    def __str__(self):
        return f"{self.preperiod}({self.period})"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    nuclei: tuple
    eventual: tuple
    t: int
    stable_depth: int = None
    branching: bool = None
    transient: tuple = ()  # Q
    sink: tuple = ()  # R
    branch_labels: tuple = ()  # Q-dagger
    cycle_word: str = None
    tail_points: tuple = field(default=())

    @property
    def k(self):
        return len(self.nuclei)

    def describe(self):
        if self.kind is Kind.MULTINUCLEAR:
            return f"Multinuclear({self.k})"
        if self.kind is Kind.QUASINUCLEAR_ATOMIC:
            return f"QuasinuclearAtomic{{branching:{str(self.branching).lower()}}}"
        return self.kind.value

    def to_dict(self):
        report = {
            "kind": self.describe(),
            "nuclei": [list(n) for n in self.nuclei],
            "eventual": list(self.eventual),
            "t": self.t,
            "stable_depth": self.stable_depth,
            "tail_points": [str(p) for p in self.tail_points],
        }
        if self.kind is Kind.QUASINUCLEAR_ATOMIC:
            report.update(
                branching=self.branching,
                Q=list(self.transient),
                R=list(self.sink),
                Q_dagger=list(self.branch_labels),
                cycle_word=self.cycle_word,
            )
        return report


def type_graph(t):
    edges = tuple((label, bit, t.child(label, bit)) for label in t.labels for bit in "01")
    return TypeGraph(tuple(t.labels), edges)


def induced_graph(t, labels):
    keep = set(labels)
    vertices = tuple(label for label in t.labels if label in keep)
    edges = tuple(
        (label, bit, t.child(label, bit)) for label in vertices for bit in "01" if t.child(label, bit) in keep
    )
    return TypeGraph(vertices, edges)


def export_dot(g, open_vertices=()):
    dot = graphviz.Digraph("type_graph")
    for v in g.vertices:
        if v in open_vertices:
            dot.node(str(v), style="dashed")
        else:
            dot.node(str(v))
    for source, bit, target in g.edges:
        dot.edge(str(source), str(target), label=str(bit))
    return dot.source


def is_child_closed(t, labels):
    labels = set(labels)
    return all(c in labels for label in labels for c in t.children(label))


def is_strongly_connected(t, labels):
    """Every member reaches every member (itself included) by a non-empty path inside ``labels``."""
    labels = set(labels)
    if not labels:
        return False
    g = label_graph(t, labels)
    if len(labels) == 1:
        (only,) = labels
        return g.has_edge(only, only)
    return nx.is_strongly_connected(g)


def depth_sets(t):
    """Label sets at depths 0, 1, ... up to the first repetition, and where the repeat starts."""
    seen = {}
    sets = []
    current = frozenset([t.root])
    while current not in seen:
        seen[current] = len(sets)
        sets.append(current)
        current = frozenset(c for label in current for c in t.children(label))
    return sets, seen[current]


def eventual_label_set(t):
    sets, start = depth_sets(t)
    eventual = frozenset().union(*sets[start:])
    depth = 0
    for d in range(start):
        if not sets[d] <= eventual:
            depth = d + 1
    return t.order(eventual), depth


def stable_child_closed_subsets(t):
    g = label_graph(t)
    closures = {label: frozenset({label} | nx.descendants(g, label)) for label in t.labels}
    closed = {frozenset()}
    for label in t.labels:
        closed |= {s | closures[label] for s in closed}
    closed.discard(frozenset())

    stable = []
    for s in closed:
        inner = label_graph(t, s)
        sources = cycle_labels(inner)
        reached = set(sources)
        for label in sources:
            reached |= nx.descendants(inner, label)
        if sources and reached == set(s):
            stable.append(t.order(s))
    stable.sort(key=lambda s: (len(s), [t.diagram.index[x] for x in s]))
    return stable


def classify(t):
    eventual, depth = eventual_label_set(t)
    g = label_graph(t, eventual)
    components = [t.order(c) for c in nx.strongly_connected_components(g)]
    components.sort(key=lambda c: t.diagram.index[c[0]])
    sinks = [c for c in components if is_child_closed(t, c) and is_strongly_connected(t, c)]

    if len(sinks) == len(components):
        kind = Kind.NUCLEAR if len(sinks) == 1 else Kind.MULTINUCLEAR
        c = Classification(kind, tuple(sinks), eventual, depth)
        return replace(c, stable_depth=depth + 2)

    transient = t.order(set(eventual) - {x for s in sinks for x in s})
    if len(sinks) == 1 and len(sinks[0]) == 1 and is_strongly_connected(t, transient):
        branch_labels = tuple(q for q in transient if all(x in transient for x in t.children(q)))
        c = Classification(
            Kind.QUASINUCLEAR_ATOMIC,
            tuple(sinks),
            eventual,
            depth,
            branching=bool(branch_labels),
            transient=transient,
            sink=sinks[0],
            branch_labels=branch_labels,
        )
        if c.branching:
            return replace(c, stable_depth=stable_depth(c, t))
        try:
            points, word = _tail_points(c, t)
        except NonPrimitiveCycle as e:
            logger.warning(f"⚠️  {e.message}; tail points left empty")
            return replace(c, cycle_word=e.word)
        return replace(c, cycle_word=word, tail_points=points)

    logger.info(f"🔍 No pattern fits: components {components}, nuclei {sinks}")
    return Classification(Kind.UNCLASSIFIED, tuple(sinks), eventual, depth)


def incomparable_witnesses(c, t):
    """Shortest incomparable pair of addresses whose types branch inside the transient part."""
    if c.kind is not Kind.QUASINUCLEAR_ATOMIC or not c.branching:
        raise NotApplicable("incomparable_witnesses", c.describe())
    found = []
    for length in range(2 * len(t.labels) + 3):
        for a in words(length):
            if type_of(t, a) not in c.branch_labels:
                continue
            for b in found:
                if incomparable(a, b):
                    return b, a
            found.append(a)
    raise NotApplicable("incomparable_witnesses", c.describe())


def stable_depth(c, t):
    if c.kind in (Kind.NUCLEAR, Kind.MULTINUCLEAR):
        return c.t + 2
    if c.kind is Kind.QUASINUCLEAR_ATOMIC and c.branching:
        d1, d2 = incomparable_witnesses(c, t)
        return max(len(d1), len(d2), c.t) + 1
    raise NotApplicable("stable_depth", c.describe())


def primitive_root(word):
    """Shortest word whose power is ``word``."""
    n = len(word)
    for size in range(1, n + 1):
        if n % size == 0 and word[:size] * (n // size) == word:
            return word[:size]
    return word


def _entry_addresses(t, within, stop):
    """Minimal addresses whose type lies in ``within``, not looking below ``stop`` types."""
    found = []
    stack = [""]
    while stack:
        a = stack.pop()
        label = type_of(t, a)
        if label in within:
            found.append(a)
        elif label not in stop:
            stack.extend((a + "1", a + "0"))
    return sorted(found)


def _canonical_point(preperiod, period):
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1] + period[:-1]
    return RationalPoint(preperiod, period)


def _tail_points(c, t):
    entries = _entry_addresses(t, c.transient, c.sink)
    step = {}
    for q in c.transient:
        bits = [bit for bit in "01" if t.child(q, bit) in c.transient]
        step[q] = bits[0]

    start = type_of(t, entries[0])
    position = {}
    word = ""
    q = start
    while q not in position:
        position[q] = len(word)
        word += step[q]
        q = t.child(q, step[q])

    root = primitive_root(word)
    if root != word:
        raise NonPrimitiveCycle(word, root)

    points = []
    for beta in entries:
        k = position[type_of(t, beta)]
        points.append(_canonical_point(beta, word[k:] + word[:k]))
    return tuple(points), word


def tail_points(c, t):
    if c.kind is not Kind.QUASINUCLEAR_ATOMIC or c.branching:
        raise NotApplicable("tail_points", c.describe())
    points, _ = _tail_points(c, t)
    return list(points)


def nucleus_graph(c, t):
    if c.kind is not Kind.NUCLEAR:
        raise NotApplicable("nucleus_graph", c.describe())
    return induced_graph(t, c.nuclei[0])


def clopen_partition(c, t):
    """For each nucleus, the coarsest cones lying entirely inside its clopen set.

    The blocks together partition Cantor space.
    """
    if c.kind not in (Kind.NUCLEAR, Kind.MULTINUCLEAR):
        raise NotApplicable("clopen_partition", c.describe())
    nuclear = set(c.eventual)
    return [tuple(_entry_addresses(t, set(nucleus), nuclear)) for nucleus in c.nuclei]
