"""Exhaustive generation of small type systems and census checks of the classification."""
import logging
import string
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import pandas as pd
from sympy.utilities.iterables import multiset_partitions

from vtypes.classification import Kind, classify, stable_child_closed_subsets
from vtypes.config import Config
from vtypes.semigroup import semigroup_info
from vtypes.type_systems import LabelDiagram, canonical_form, is_simple, validate

logger = logging.getLogger(__name__)

MAX_LABELS = 7
CENSUS_COLUMNS = [
    "canonical_form",
    "labels",
    "simple",
    "kind",
    "nuclei_sizes",
    "invariant_factors",
    "free_rank",
    "det",
    "stable_subsets",
]


def label_names(k):
    return tuple(string.ascii_uppercase[:k])


def _extend(k, edges, discovered):
    """Fill child pairs in breadth-first order so that every labelling is canonical."""
    i = len(edges)
    if i == k:
        if discovered == k:
            yield tuple(edges)
        return
    if i >= discovered:
        return  # label i is unreachable
    for c0 in range(min(discovered + 1, k)):
        seen0 = max(discovered, c0 + 1)
        for c1 in range(min(seen0 + 1, k)):
            seen1 = max(seen0, c1 + 1)
            yield from _extend(k, edges + [(c0, c1)], seen1)


def _shard_keys(k):
    """Possible child pairs of the root; work is split along these."""
    keys = []
    for c0 in range(min(2, k)):
        seen0 = max(1, c0 + 1)
        keys.extend((c0, c1) for c1 in range(min(seen0 + 1, k)))
    return keys


def _diagrams_with_root_pair(k, root_pair):
    names = label_names(k)
    c0, c1 = root_pair
    discovered = max(1, c0 + 1, c1 + 1)
    for edges in _extend(k, [root_pair], discovered):
        pairs = tuple((names[a], names[b]) for a, b in edges)
        if len(set(pairs)) < k:
            continue  # two labels with the same children
        yield validate(LabelDiagram(names, pairs, names[0]))


def enumerate_diagrams(n):
    """All reachable reduced rooted diagrams with at most ``n`` labels, one per isomorphism class."""
    if not 1 <= n <= MAX_LABELS:
        raise ValueError(f"max labels must be in 1..{MAX_LABELS}, got {n}")
    for k in range(1, n + 1):
        for key in _shard_keys(k):
            yield from _diagrams_with_root_pair(k, key)


@dataclass
class CensusRow:
    canonical_form: str
    labels: int
    simple: bool
    kind: str
    nuclei_sizes: list
    invariant_factors: list
    free_rank: int
    det: int
    stable_subsets: list


def census_row(t):
    simple = is_simple(t).simple if len(t.labels) > 1 else None
    c = classify(t)
    factors = free_rank = det = None
    if c.kind is Kind.NUCLEAR:
        (info,) = semigroup_info(t, c)
        factors, free_rank, det = list(info.invariant_factors), info.free_rank, info.det_I_minus_A
    return CensusRow(
        canonical_form=canonical_form(t),
        labels=len(t.labels),
        simple=simple,
        kind=c.describe(),
        nuclei_sizes=[len(x) for x in c.nuclei],
        invariant_factors=factors,
        free_rank=free_rank,
        det=det,
        stable_subsets=[list(s) for s in stable_child_closed_subsets(t)],
    )


def _census_shard(args):
    k, key = args
    return [census_row(t) for t in _diagrams_with_root_pair(k, key)]


def census(n, workers=None):
    """Census rows for every enumerated system, sorted by label count then canonical form."""
    if not 1 <= n <= MAX_LABELS:
        raise ValueError(f"max labels must be in 1..{MAX_LABELS}, got {n}")
    workers = Config.THREADS if workers is None else workers
    shards = [(k, key) for k in range(1, n + 1) for key in _shard_keys(k)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_census_shard, shards))
    else:
        results = [_census_shard(s) for s in shards]
    rows = [row for chunk in results for row in chunk]
    rows.sort(key=lambda r: (r.labels, r.canonical_form))
    logger.info(f"📊 census of {len(rows)} systems with at most {n} labels")
    return rows


def census_frame(rows):
    return pd.DataFrame([vars(r) for r in rows], columns=CENSUS_COLUMNS)


def write_census_csv(rows, path):
    frame = census_frame(rows)
    for column in ("nuclei_sizes", "invariant_factors"):
        frame[column] = frame[column].map(lambda v: "" if v is None else " ".join(str(x) for x in v))
    frame["stable_subsets"] = frame["stable_subsets"].map(lambda v: "|".join(" ".join(s) for s in v))
    frame.to_csv(path, index=False)
    return frame


def _allowed_kind(kind, nuclei_sizes):
    if kind == Kind.NUCLEAR.value or kind.startswith(Kind.QUASINUCLEAR_ATOMIC.value):
        return True
    return kind == f"{Kind.MULTINUCLEAR.value}(2)" and list(nuclei_sizes) == [1, 1]


def is_allowed_simple_kind(c):
    """Nuclear, atomic binuclear, or atomic quasinuclear."""
    return _allowed_kind(c.describe(), [len(x) for x in c.nuclei])


@dataclass
class VerificationReport:
    max_labels: int
    systems: int = 0
    simple: int = 0
    counts: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {
            "max_labels": self.max_labels,
            "systems": self.systems,
            "simple": self.simple,
            "counts": dict(sorted(self.counts.items())),
            "violations": list(self.violations),
        }


def verify_classification(n, rows=None):
    """Check every simple system's kind; ``rows`` reuses an existing census."""
    rows = census(n, workers=1) if rows is None else rows
    report = VerificationReport(n)
    for row in rows:
        report.systems += 1
        if not row.simple:
            continue
        report.simple += 1
        report.counts[row.kind] += 1
        if not _allowed_kind(row.kind, row.nuclei_sizes):
            report.violations.append(f"{row.canonical_form}: {row.kind}")
            logger.error(f"❌ simple system {row.canonical_form} classified {row.kind}")
    return report


def stable_subset_configuration_ok(subsets):
    """One subset; two nested subsets; or two disjoint singletons with their union."""
    sets = [frozenset(s) for s in subsets]
    if len(sets) == 1:
        return True
    if len(sets) == 2:
        a, b = sets
        return a < b or b < a
    if len(sets) == 3:
        for union in sets:
            rest = [s for s in sets if s is not union]
            if rest[0].isdisjoint(rest[1]) and rest[0] | rest[1] == union:
                return True
    return False


def verify_stable_subset_counts(n, rows=None):
    rows = census(n, workers=1) if rows is None else rows
    report = VerificationReport(n)
    for row in rows:
        report.systems += 1
        if not row.simple:
            continue
        report.simple += 1
        report.counts[len(row.stable_subsets)] += 1
        if not stable_subset_configuration_ok(row.stable_subsets):
            report.violations.append(f"{row.canonical_form}: {row.stable_subsets}")
    return report


def brute_force_quotients(t):
    """Every child-respecting, reduced partition of the labels, found by trying all partitions."""
    found = []
    for blocks in multiset_partitions(list(t.labels)):
        owner = {label: i for i, block in enumerate(blocks) for label in block}
        child_blocks = {}
        ok = True
        for i, block in enumerate(blocks):
            images = {(owner[t.child(x, 0)], owner[t.child(x, 1)]) for x in block}
            if len(images) != 1:
                ok = False
                break
            child_blocks[i] = images.pop()
        if ok and len(set(child_blocks.values())) == len(blocks):
            found.append(tuple(tuple(b) for b in blocks))
    return found


def is_simple_brute_force(t):
    return all(len(blocks) in (1, len(t.labels)) for blocks in brute_force_quotients(t))
