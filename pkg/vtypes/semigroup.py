"""The semigroup of a type system and its group invariants.

For a nucleus the semigroup is the abelian group on one generator per label
subject to ``p = p0 + p1``, i.e. the cokernel of ``I - A`` acting on row
vectors.  Everything is computed with exact integers.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import Matrix

from vtypes.cantor_core import check_antichain, refine_to_depth
from vtypes.classification import Kind, induced_graph
from vtypes.type_systems import type_of
from vtypes.utils.errors import NotApplicable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    @classmethod
    def of(cls, rows):
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def to_array(self):
        return np.array(self.rows, dtype=object).reshape(self.shape)


@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple
    left: IntMatrix
    right: IntMatrix


@dataclass(frozen=True)
class SemigroupInfo:
    labels: tuple
    invariant_factors: tuple
    free_rank: int
    h1_rank: int
    det_I_minus_A: int
    abelianization: tuple  # (torsion factors, free rank)
    fix_simple: bool
    fix_virtually_simple: bool

    @property
    def torsion_order(self):
        if self.free_rank:
            return None
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order

    def to_dict(self):
        return {
            "labels": list(self.labels),
            "invariant_factors": list(self.invariant_factors),
            "free_rank": self.free_rank,
            "h1_rank": self.h1_rank,
            "det": self.det_I_minus_A,
            "abelianization": abelianization_text(self),
            "fix_simple": self.fix_simple,
            "fix_virtually_simple": self.fix_virtually_simple,
        }


@dataclass(frozen=True)
class SType:
    """Canonical coordinates of a semigroup element; torsion coordinates reduced mod their factor."""

    coordinates: tuple
    moduli: tuple

    def __str__(self):
        return "(" + ", ".join(str(x) for x, m in zip(self.coordinates, self.moduli) if m != 1) + ")"


def adjacency_matrix(g):
    index = {v: i for i, v in enumerate(g.vertices)}
    rows = [[0] * len(g.vertices) for _ in g.vertices]
    for source, _, target in g.edges:
        rows[index[source]][index[target]] += 1
    return IntMatrix.of(rows)


class _SmithReducer:
    """Diagonalize ``left @ m @ right`` with unimodular transforms, pivoting on the smallest entry."""

    def __init__(self, m):
        self.a = m.to_array()
        rows, cols = m.shape
        self.left = np.identity(rows, dtype=int).astype(object)
        self.right = np.identity(cols, dtype=int).astype(object)

    def _pivot(self, s):
        best = None
        rows, cols = self.a.shape
        for i in range(s, rows):
            for j in range(s, cols):
                value = abs(self.a[i, j])
                if value and (best is None or value < best[0]):
                    best = (value, i, j)
        return best

    def _swap_rows(self, i, j):
        self.a[[i, j]] = self.a[[j, i]]
        self.left[[i, j]] = self.left[[j, i]]

    def _swap_cols(self, i, j):
        self.a[:, [i, j]] = self.a[:, [j, i]]
        self.right[:, [i, j]] = self.right[:, [j, i]]

    def _add_row(self, target, source, k):
        self.a[target] += k * self.a[source]
        self.left[target] += k * self.left[source]

    def _add_col(self, target, source, k):
        self.a[:, target] += k * self.a[:, source]
        self.right[:, target] += k * self.right[:, source]

    def _clear_cross(self, s):
        rows, cols = self.a.shape
        p = self.a[s, s]
        for i in range(s + 1, rows):
            if self.a[i, s]:
                self._add_row(i, s, -(self.a[i, s] // p))
        for j in range(s + 1, cols):
            if self.a[s, j]:
                self._add_col(j, s, -(self.a[s, j] // p))
        return not any(self.a[s + 1:, s]) and not any(self.a[s, s + 1:])

    def _non_divisible(self, s):
        rows, cols = self.a.shape
        p = self.a[s, s]
        for i in range(s + 1, rows):
            for j in range(s + 1, cols):
                if self.a[i, j] % p:
                    return i
        return None

    def run(self):
        rows, cols = self.a.shape
        for s in range(min(rows, cols)):
            while True:
                best = self._pivot(s)
                if best is None:
                    return self
                _, i, j = best
                self._swap_rows(s, i)
                self._swap_cols(s, j)
                if not self._clear_cross(s):
                    continue
                row = self._non_divisible(s)
                if row is None:
                    break
                self._add_row(s, row, 1)
            if self.a[s, s] < 0:
                self.a[s] = -self.a[s]
                self.left[s] = -self.left[s]
        return self


def smith_normal_form(m):
    if not isinstance(m, IntMatrix):
        m = IntMatrix.of(m)
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return SNFResult((), IntMatrix.of(np.identity(rows, dtype=int)), IntMatrix.of(np.identity(cols, dtype=int)))
    reducer = _SmithReducer(m).run()
    diagonal = tuple(int(reducer.a[i, i]) for i in range(min(rows, cols)))
    return SNFResult(diagonal, IntMatrix.of(reducer.left), IntMatrix.of(reducer.right))


def relation_matrix(t, labels):
    """``I - A`` over the graph induced on ``labels``."""
    a = adjacency_matrix(induced_graph(t, labels)).to_array()
    return IntMatrix.of(np.identity(len(labels), dtype=int).astype(object) - a)


@lru_cache(maxsize=256)
def _presentation(t, labels):
    m = relation_matrix(t, labels)
    return m, smith_normal_form(m)


def abelianization_text(info):
    torsion, free = info.abelianization
    parts = [f"Z{d}" for d in torsion] + ["Z"] * free
    return " ⊕ ".join(parts) if parts else "0"


def _info(t, labels):
    m, snf = _presentation(t, labels)
    factors = tuple(d for d in snf.diagonal if d > 1)
    free_rank = sum(1 for d in snf.diagonal if d == 0)
    det = int(Matrix(m.rows).det())
    even = sum(1 for d in factors if d % 2 == 0)
    return SemigroupInfo(
        labels=tuple(labels),
        invariant_factors=factors,
        free_rank=free_rank,
        h1_rank=free_rank,
        det_I_minus_A=det,
        abelianization=((2,) * (even + free_rank), free_rank),
        fix_simple=free_rank == 0 and even == 0,
        fix_virtually_simple=free_rank == 0,
    )


def semigroup_info(t, c):
    """Group invariants, one entry per nucleus."""
    if c.kind not in (Kind.NUCLEAR, Kind.MULTINUCLEAR):
        raise NotApplicable("semigroup_info", c.describe())
    infos = tuple(_info(t, tuple(nucleus)) for nucleus in c.nuclei)
    logger.info(f"📊 semigroup invariants computed for {len(infos)} nucleus/nuclei")
    return infos


def _canonical(snf, vector):
    y = np.array(vector, dtype=object).dot(snf.right.to_array())
    coordinates = []
    for i, value in enumerate(y):
        d = snf.diagonal[i] if i < len(snf.diagonal) else 0
        coordinates.append(int(value) % d if d > 0 else int(value))
    moduli = tuple(snf.diagonal) + (0,) * (len(y) - len(snf.diagonal))
    return SType(tuple(coordinates), moduli)


def stype_of(t, c, cones):
    """Semigroup element of the union of disjoint ``cones``."""
    if c.kind is not Kind.NUCLEAR:
        raise NotApplicable("stype_of", c.describe())
    cones = check_antichain(cones)
    labels = tuple(c.nuclei[0])
    index = {label: i for i, label in enumerate(labels)}
    vector = [0] * len(labels)
    for cone in cones:
        for a in refine_to_depth((cone,), max(c.t, len(cone))):
            vector[index[type_of(t, a)]] += 1
    _, snf = _presentation(t, labels)
    return _canonical(snf, vector)


def stype_equal(x, y):
    return x == y
