"""Membership in Fix(V,P) and Stab(V,P), matched decompositions and witness elements."""
import heapq
import logging
from dataclasses import dataclass
from functools import lru_cache

from sympy import Matrix

from vtypes.cantor_core import check_antichain, complete_antichain, incomparable, words
from vtypes.classification import Kind, classify, stable_depth
from vtypes.config import Config
from vtypes.semigroup import relation_matrix, stype_of
from vtypes.type_systems import class_finiteness, type_of
from vtypes.utils.errors import (
    NotApplicable,
    NotInStab,
    PreconditionViolated,
    SearchExhausted,
    TooFewLabels,
    TypeMismatch,
)
from vtypes.v_elements import PrefixMap, normalize, partial_apply, transposition

logger = logging.getLogger(__name__)

DEEP_CHECK_LEVELS = 3


@dataclass(frozen=True)
class LabelPairRelation:
    pairs: tuple

    def image(self, label):
        return tuple(b for a, b in self.pairs if a == label)

    @property
    def functional(self):
        return all(len(self.image(a)) == 1 for a, _ in self.pairs)

    @property
    def injective(self):
        targets = [b for _, b in self.pairs]
        return len(targets) == len(set(targets))

    def as_mapping(self):
        return dict(self.pairs)


@dataclass(frozen=True)
class StabVerdict:
    member: bool
    relation: LabelPairRelation

    def __bool__(self):
        return self.member


@dataclass(frozen=True)
class ClassPermutation:
    mapping: tuple  # (label, image) over labels with infinite classes

    @property
    def is_identity(self):
        return all(a == b for a, b in self.mapping)

    def cycles(self):
        table = dict(self.mapping)
        seen = set()
        found = []
        for start, _ in self.mapping:
            if start in seen or table[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            label = table[start]
            while label != start:
                cycle.append(label)
                seen.add(label)
                label = table[label]
            found.append(tuple(cycle))
        return found

    def __str__(self):
        cycles = self.cycles()
        return "".join("(" + " ".join(c) + ")" for c in cycles) if cycles else "id"


@dataclass(frozen=True)
class MatchedDecomposition:
    pairs: tuple
    carets: int = 0


def in_fix(t, g, deep=False):
    """Every pair of ``g`` maps a cone onto a cone of the same type."""
    g = normalize(g)
    verdict = all(type_of(t, a) == type_of(t, b) for a, b in g.pairs)
    if deep:
        deep_verdict = all(
            type_of(t, a + eta) == type_of(t, b + eta)
            for a, b in g.pairs
            for eta in words(DEEP_CHECK_LEVELS)
        )
        if deep_verdict != verdict:
            logger.error(f"❌ deep check disagrees for {g}")
        return verdict and deep_verdict
    return verdict


def in_stab(t, g):
    """Close the induced label relation under children and test that it is a bijection."""
    g = normalize(g)
    pairs = {(type_of(t, a), type_of(t, b)) for a, b in g.pairs}
    pending = list(pairs)
    while pending:
        p, q = pending.pop()
        for bit in "01":
            child = (t.child(p, bit), t.child(q, bit))
            if child not in pairs:
                pairs.add(child)
                pending.append(child)
    index = t.diagram.index
    relation = LabelPairRelation(tuple(sorted(pairs, key=lambda pq: (index[pq[0]], index[pq[1]]))))
    return StabVerdict(relation.functional and relation.injective, relation)


def induced_class_permutation(t, g):
    verdict = in_stab(t, g)
    if not verdict.member:
        raise NotInStab()
    sizes = class_finiteness(t)
    mapping = verdict.relation.as_mapping()
    return ClassPermutation(tuple((label, mapping[label]) for label in t.labels if not sizes[label].finite and label in mapping))


def fix_transpositions_at_depth(t, depth):
    if depth < 1:
        raise PreconditionViolated(f"depth must be at least 1, got {depth}")
    level = words(depth)
    types = {a: type_of(t, a) for a in level}
    return [transposition(a, b) for i, a in enumerate(level) for b in level[i + 1:] if types[a] == types[b]]


def non_stabilizing_transposition(t, max_depth=None):
    """First transposition, in length-lex order of its cones, that leaves Stab(V,P)."""
    if len(t.labels) < 2:
        raise TooFewLabels(len(t.labels))
    max_depth = 2 * len(t.labels) + 3 if max_depth is None else max_depth
    seen = []
    for length in range(1, max_depth + 1):
        for b in words(length):
            for a in seen:
                if incomparable(a, b):
                    swap = transposition(a, b)
                    if not in_stab(t, swap).member:
                        return swap
            seen.append(b)
    raise NotApplicable("non_stabilizing_transposition", f"{len(t.labels)}-label")


def _counts(t, cones):
    index = t.diagram.index
    counts = [0] * len(t.labels)
    for a in cones:
        counts[index[type_of(t, a)]] += 1
    return tuple(counts)


def _pairing(t, left, right):
    index = t.diagram.index
    ordered_left = sorted(left, key=lambda a: (index[type_of(t, a)], a))
    ordered_right = sorted(right, key=lambda a: (index[type_of(t, a)], a))
    return tuple(zip(ordered_left, ordered_right))


@lru_cache(maxsize=64)
def _inverse_relations(t):
    """Adjugate and determinant of ``I - A`` over all labels, or None when it is singular."""
    m = Matrix(relation_matrix(t, tuple(t.labels)).rows)
    det = int(m.det())
    if det == 0:
        return None
    return tuple(tuple(int(x) for x in m.adjugate().row(i)) for i in range(m.rows)), abs(det)


def _distance(t):
    """Lower bound on the carets still needed from a state.

    Splitting a label on the left subtracts its row of ``I - A`` from the
    count difference, splitting on the right adds it; so when ``I - A`` is
    invertible the net number of splits per label is forced.
    """
    inverse = _inverse_relations(t)
    if inverse is None:
        return (lambda state: sum(abs(x - y) for x, y in zip(*state))), False
    adjugate, det = inverse
    size = len(adjugate)

    def forced_splits(state):
        left, right = state
        diff = [x - y for x, y in zip(left, right)]
        total = 0
        for j in range(size):
            value = sum(diff[i] * adjugate[i][j] for i in range(size))
            if value % det:
                return None
            total += abs(value) // det
        return total

    return forced_splits, True


def _search_moves(t, start, budget, max_expansions):
    """Best-first search over type-count states; returns the caret moves as (side, label index)."""
    children = [tuple(t.diagram.index[c] for c in t.children(label)) for label in t.labels]
    distance, exact = _distance(t)
    weight = 1 if exact else 2
    first = distance(start)
    if first is None:
        raise TypeMismatch(list(start[0]), list(start[1]))

    parents = {start: None}
    cost = {start: 0}
    frontier = [(weight * first, first, start)]
    expansions = 0
    while frontier:
        state = heapq.heappop(frontier)[2]
        if state[0] == state[1]:
            moves = []
            while parents[state] is not None:
                state, move = parents[state]
                moves.append(move)
            return moves[::-1]
        expansions += 1
        if expansions > max_expansions:
            break
        carets = cost[state]
        if carets >= budget:
            continue
        for side in (0, 1):
            counts = state[side]
            for label, n in enumerate(counts):
                if not n:
                    continue
                grown = list(counts)
                grown[label] -= 1
                for c in children[label]:
                    grown[c] += 1
                nxt = (tuple(grown), state[1]) if side == 0 else (state[0], tuple(grown))
                if nxt in cost and cost[nxt] <= carets + 1:
                    continue
                d = distance(nxt)
                if exact and carets + 1 + d > budget:
                    continue
                cost[nxt] = carets + 1
                parents[nxt] = (state, (side, label))
                heapq.heappush(frontier, (carets + 1 + weight * d, d, nxt))
    raise SearchExhausted(budget, expansions)


def matched_decomposition(t, source, target, budget=None, classification=None, max_expansions=None):
    """Subdivide both cone sets until their leaves pair off with equal types."""
    budget = Config.MAX_CARETS if budget is None else budget
    max_expansions = Config.MAX_EXPANSIONS if max_expansions is None else max_expansions
    left = list(check_antichain(source))
    right = list(check_antichain(target))

    classification = classify(t) if classification is None else classification
    if classification.kind is Kind.NUCLEAR:
        x = stype_of(t, classification, left)
        y = stype_of(t, classification, right)
        if x != y:
            raise TypeMismatch(x.coordinates, y.coordinates)

    start = (_counts(t, left), _counts(t, right))
    moves = _search_moves(t, start, budget, max_expansions)

    # replay on addresses, always splitting the least cone of the chosen type
    sides = [left, right]
    for side, label_index in moves:
        label = t.labels[label_index]
        cone = min(a for a in sides[side] if type_of(t, a) == label)
        sides[side].remove(cone)
        sides[side].extend((cone + "0", cone + "1"))
    logger.debug(f"🔍 matched decomposition after {len(moves)} carets")
    return MatchedDecomposition(_pairing(t, sides[0], sides[1]), carets=len(moves))


def witness_conjugator(t, c, alpha, alpha2, beta, beta2, budget=None):
    """Element of Fix(V,P) sending ``alpha`` to ``alpha2`` and ``beta`` to ``beta2``."""
    if c.kind not in (Kind.NUCLEAR, Kind.MULTINUCLEAR) and not (c.kind is Kind.QUASINUCLEAR_ATOMIC and c.branching):
        raise PreconditionViolated(f"witness_conjugator does not apply to a {c.describe()} system")
    if type_of(t, alpha) != type_of(t, alpha2) or type_of(t, beta) != type_of(t, beta2):
        raise PreconditionViolated("prescribed images must keep the types")
    if not incomparable(alpha, beta) or not incomparable(alpha2, beta2):
        raise PreconditionViolated("alpha, beta (and their images) must be incomparable")
    depth = c.stable_depth if c.stable_depth is not None else stable_depth(c, t)
    if min(len(alpha), len(alpha2), len(beta), len(beta2)) < depth:
        raise PreconditionViolated(f"addresses must have length at least the stable depth {depth}")

    source = complete_antichain([alpha, beta])
    target = complete_antichain([alpha2, beta2])
    matched = matched_decomposition(t, source, target, budget=budget, classification=c)
    pairs = [(alpha, alpha2), (beta, beta2), *matched.pairs]
    g = normalize(PrefixMap(tuple(sorted(pairs))))
    if partial_apply(g, alpha) != alpha2 or partial_apply(g, beta) != beta2:
        raise PreconditionViolated("constructed element misses a prescribed image")
    logger.info(f"✅ witness built with {len(g.pairs)} pairs")
    return g
