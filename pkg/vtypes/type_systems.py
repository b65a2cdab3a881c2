"""Finite type systems described by label diagrams.

A label diagram names a label for every address: the empty address gets the
root label and appending a bit follows the corresponding child map.  A
diagram whose child-pair map is injective is a type system.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
from networkx.utils import UnionFind

from vtypes.utils.errors import (
    DiagramSyntaxError,
    NoRoot,
    ReducednessViolation,
    TooFewLabels,
    UnknownLabel,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabelDiagram:
    labels: tuple
    edges: tuple  # (child0, child1) per label, aligned with ``labels``
    root: str

    @cached_property
    def table(self):
        return dict(zip(self.labels, self.edges))

    @cached_property
    def index(self):
        return {label: i for i, label in enumerate(self.labels)}

    def child(self, label, bit):
        return self.table[label][0 if bit in ("0", 0) else 1]

    def children(self, label):
        return self.table[label]


@dataclass(frozen=True)
class TypeSystem:
    diagram: LabelDiagram
    reduced_certificate: bool = True

    @property
    def labels(self):
        return self.diagram.labels

    @property
    def root(self):
        return self.diagram.root

    def child(self, label, bit):
        return self.diagram.child(label, bit)

    def children(self, label):
        return self.diagram.children(label)

    def order(self, labels):
        """Sort labels by their position in the diagram."""
        return tuple(sorted(labels, key=self.diagram.index.__getitem__))

    def __len__(self):
        return len(self.diagram.labels)


@dataclass(frozen=True)
class ClassSize:
    finite: bool
    count: int = None

    def __str__(self):
        return f"finite({self.count})" if self.finite else "infinite"


def _as_diagram(t):
    return t.diagram if isinstance(t, TypeSystem) else t


def diagram_from_table(table, root):
    """Build a diagram from ``{label: (child0, child1)}``, pruning unreachable labels."""
    if root not in table:
        raise UnknownLabel(root)
    for label, pair in table.items():
        for c in pair:
            if c not in table:
                raise UnknownLabel(c)

    reachable = {root}
    queue = deque([root])
    while queue:
        for c in table[queue.popleft()]:
            if c not in reachable:
                reachable.add(c)
                queue.append(c)

    dropped = [label for label in table if label not in reachable]
    if dropped:
        logger.warning(f"⚠️  Pruning unreachable labels: {', '.join(dropped)}")

    labels = tuple(label for label in table if label in reachable)
    return LabelDiagram(labels, tuple(tuple(table[label]) for label in labels), root)


def parse_diagram(text):
    """Read the ``.lts`` format.

    One ``root L`` line, one ``L -> L0 L1`` line per label, ``#`` comments.
    """
    root = None
    table = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "root":
            if len(tokens) != 2 or root is not None:
                raise DiagramSyntaxError(line_no, raw, "expected a single 'root L' line")
            root = tokens[1]
            continue
        if len(tokens) != 4 or tokens[1] != "->":
            raise DiagramSyntaxError(line_no, raw)
        if tokens[0] in table:
            raise DiagramSyntaxError(line_no, raw, f"label {tokens[0]} defined twice")
        table[tokens[0]] = (tokens[2], tokens[3])

    if root is None:
        raise NoRoot()
    return diagram_from_table(table, root)


def format_diagram(t):
    """Serialize in canonical breadth-first label order."""
    d = _as_diagram(t)
    lines = [f"root {d.root}"]
    for label in bfs_order(d):
        c0, c1 = d.children(label)
        lines.append(f"{label} -> {c0} {c1}")
    return "\n".join(lines) + "\n"


def validate(d):
    """Certify that the child-pair map is injective."""
    seen = {}
    for label, pair in zip(d.labels, d.edges):
        if pair in seen:
            raise ReducednessViolation(seen[pair], label, pair)
        seen[pair] = label
    return TypeSystem(d, reduced_certificate=True)


def load_system(text):
    return validate(parse_diagram(text))


def type_of(t, address):
    label = t.root
    for bit in address:
        label = t.child(label, bit)
    return label


def bfs_order(t):
    """Labels in order of first visit from the root, child 0 before child 1."""
    d = _as_diagram(t)
    order = [d.root]
    seen = {d.root}
    i = 0
    while i < len(order):
        for c in d.children(order[i]):
            if c not in seen:
                seen.add(c)
                order.append(c)
        i += 1
    return order


def canonical_key(t):
    """Child pairs as BFS indices; equal keys mean isomorphic rooted diagrams."""
    d = _as_diagram(t)
    order = bfs_order(d)
    rank = {label: i for i, label in enumerate(order)}
    return tuple((rank[d.child(label, 0)], rank[d.child(label, 1)]) for label in order)


def canonical_form(t):
    return " ".join(f"{i}:{a},{b}" for i, (a, b) in enumerate(canonical_key(t)))


def _quotient_diagram(d, blocks):
    """Diagram on blocks, each block named after its first member."""
    name = {}
    for block in blocks:
        for label in block:
            name[label] = block[0]
    table = {}
    for block in blocks:
        c0, c1 = d.children(block[0])
        table[block[0]] = (name[c0], name[c1])
    return diagram_from_table(table, name[d.root])


def _blocks_from_unionfind(d, uf):
    groups = {}
    for label in d.labels:
        groups.setdefault(uf[label], []).append(label)
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda b: d.index[b[0]]))


def _pair(d, p, q):
    return (p, q) if d.index[p] < d.index[q] else (q, p)


def pair_graph(t):
    """Off-diagonal label pairs with an edge to the child pairs that stay off-diagonal."""
    d = _as_diagram(t)
    g = nx.DiGraph()
    for i, p in enumerate(d.labels):
        for q in d.labels[i + 1:]:
            g.add_node((p, q))
            for bit in (0, 1):
                a, b = d.child(p, bit), d.child(q, bit)
                if a != b:
                    g.add_edge((p, q), _pair(d, a, b))
    return g


def separated_pairs(t):
    """Pairs from which an off-diagonal cycle can be reached."""
    g = pair_graph(t)
    on_cycle = set()
    for component in nx.strongly_connected_components(g):
        node = next(iter(component))
        if len(component) > 1 or g.has_edge(node, node):
            on_cycle.update(component)
    bad = set(on_cycle)
    for node in on_cycle:
        bad.update(nx.ancestors(g, node))
    return bad


def reduce(d):
    """Smallest reduced quotient: merge labels whose descendants eventually agree."""
    d = _as_diagram(d)
    bad = separated_pairs(d)
    uf = UnionFind(d.labels)
    for i, p in enumerate(d.labels):
        for q in d.labels[i + 1:]:
            if (p, q) not in bad:
                uf.union(p, q)
    blocks = _blocks_from_unionfind(d, uf)
    quotient = d if len(blocks) == len(d.labels) else _quotient_diagram(d, blocks)
    return validate(quotient), blocks


def congruence_closure(t, p, q):
    """Finest child-respecting partition that puts ``p`` and ``q`` together."""
    d = _as_diagram(t)
    uf = UnionFind(d.labels)
    pending = [(p, q)]
    while pending:
        a, b = pending.pop()
        if uf[a] == uf[b]:
            continue
        uf.union(a, b)
        pending.extend((d.child(a, bit), d.child(b, bit)) for bit in (0, 1))
    return _blocks_from_unionfind(d, uf)


def quotient_by_pair(t, p, q):
    """Smallest type-system quotient identifying ``p`` and ``q``."""
    d = _as_diagram(t)
    closure = congruence_closure(d, p, q)
    reduced, merged = reduce(_quotient_diagram(d, closure))

    # pull the blocks of the reduced quotient back to labels of ``t``
    owner = {}
    for block in merged:
        for label in block:
            owner[label] = block[0]
    groups = {}
    for block in closure:
        groups.setdefault(owner[block[0]], []).extend(block)
    blocks = tuple(
        sorted((tuple(sorted(g, key=d.index.__getitem__)) for g in groups.values()), key=lambda b: d.index[b[0]])
    )
    return reduced, blocks


@dataclass(frozen=True)
class SimplicityVerdict:
    simple: bool
    witness_pair: tuple = None
    witness_blocks: tuple = None


def is_simple(t):
    if len(t.labels) < 2:
        raise TooFewLabels(len(t.labels))
    for i, p in enumerate(t.labels):
        for q in t.labels[i + 1:]:
            quotient, blocks = quotient_by_pair(t, p, q)
            if len(quotient.labels) > 1:
                return SimplicityVerdict(False, (p, q), blocks)
    return SimplicityVerdict(True)


def label_graph(t, within=None):
    """Simple directed graph of child edges, optionally induced on ``within``."""
    d = _as_diagram(t)
    keep = set(d.labels if within is None else within)
    g = nx.DiGraph()
    g.add_nodes_from(label for label in d.labels if label in keep)
    for label in g.nodes:
        for c in d.children(label):
            if c in keep:
                g.add_edge(label, c)
    return g


def cycle_labels(g):
    """Labels lying on a directed cycle of ``g``."""
    found = set()
    for component in nx.strongly_connected_components(g):
        node = next(iter(component))
        if len(component) > 1 or g.has_edge(node, node):
            found.update(component)
    return found


def class_finiteness(t):
    """Size of each label's class of addresses."""
    g = label_graph(t)
    infinite = set()
    for label in cycle_labels(g):
        infinite.add(label)
        infinite.update(nx.descendants(g, label))

    counts = {}

    def count(label):
        if label not in counts:
            total = 1 if label == t.root else 0
            for parent in t.labels:
                multiplicity = t.children(parent).count(label)
                if multiplicity:
                    total += multiplicity * count(parent)
            counts[label] = total
        return counts[label]

    # the finite labels and their ancestors form an acyclic part of the graph
    return {
        label: ClassSize(False) if label in infinite else ClassSize(True, count(label))
        for label in t.labels
    }


def diagram_automorphisms(t):
    """Label permutations commuting with both child maps, identity first."""
    found = []
    for image in t.labels:
        sigma = {t.root: image}
        queue = deque([t.root])
        consistent = True
        while queue and consistent:
            label = queue.popleft()
            for bit in (0, 1):
                c, target = t.child(label, bit), t.child(sigma[label], bit)
                if c not in sigma:
                    sigma[c] = target
                    queue.append(c)
                elif sigma[c] != target:
                    consistent = False
                    break
        if consistent and len(set(sigma.values())) == len(t.labels):
            found.append({label: sigma[label] for label in t.labels})
    found.sort(key=lambda s: [t.diagram.index[s[label]] for label in t.labels])
    return found
