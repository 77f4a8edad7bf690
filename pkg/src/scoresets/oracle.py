"""Exhaustive ground truth over small oriented bipartite graphs.

Arc assignments of shape (m, n) are numbered 0 .. 3**(m*n) - 1.  The
state of pair (u, v) is the base-3 digit at position u * n + v, with
pair (0, 0) least significant; digit values follow ArcState (0 absent,
1 u->v, 2 v->u).  The numbering is part of the catalog file contract,
so witnesses stay portable.

Bulk scans work on contiguous index chunks (the shard unit) with
vectorized scoring; per-chunk results merge associatively, so the
outcome is independent of the chunk size.  Every entry point enforces a
budget cap on 3**(m*n) before touching a shape.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Iterator

import numpy as np

from .criteria import check_bipartite_pair
from .graph_core import BipartiteOrientedGraph, ScoreSequencePair, ScoreSet

DEFAULT_BUDGET = 3**16
_CHUNK = 1 << 18
_NET = np.array([0, 1, -1], dtype=np.int16)  # score contribution per digit


class BudgetExceededError(RuntimeError):
    """The enumeration space exceeds the configured budget."""


def space_size(m: int, n: int) -> int:
    return 3 ** (m * n)


def _require_budget(m: int, n: int, budget: int) -> int:
    total = space_size(m, n)
    if total > budget:
        raise BudgetExceededError(
            f"shape ({m}, {n}) has {total} assignments, budget allows {budget}; "
            "raise the budget to proceed"
        )
    return total


@dataclass(frozen=True)
class EnumerationSpace:
    """Index space of all arc assignments for fixed part sizes."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("both parts must be nonempty")

    @property
    def total(self) -> int:
        return space_size(self.m, self.n)

    def decode(self, index: int) -> BipartiteOrientedGraph:
        if not 0 <= index < self.total:
            raise ValueError(f"index {index} outside [0, {self.total})")
        buf = bytearray(self.m * self.n)
        rem = index
        for pos in range(len(buf)):
            rem, buf[pos] = divmod(rem, 3)
        return BipartiteOrientedGraph._from_raw(self.m, self.n, buf)

    def encode(self, graph: BipartiteOrientedGraph) -> int:
        if (graph.m, graph.n) != (self.m, self.n):
            raise ValueError("graph shape does not match this space")
        index = 0
        for u in reversed(range(self.m)):
            for v in reversed(range(self.n)):
                index = index * 3 + int(graph.arc(u, v))
        return index


def enumerate_graphs(
    m: int,
    n: int,
    visitor: Callable[[BipartiteOrientedGraph], None],
    *,
    budget: int = DEFAULT_BUDGET,
    start: int = 0,
    stop: int | None = None,
) -> int:
    """Visit every assignment of shape (m, n) in ascending index order.

    ``start``/``stop`` restrict the scan to one shard.  Returns the
    number of visits.
    """
    total = _require_budget(m, n, budget)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad shard [{start}, {stop}) for space of {total}")
    space = EnumerationSpace(m, n)
    for index in range(start, stop):
        visitor(space.decode(index))
    return stop - start


def _chunk_scores(m: int, n: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized scores for assignment indices [lo, hi).

    Returns (u_scores, v_scores) of shapes (hi-lo, m) and (hi-lo, n).
    """
    count = hi - lo
    rem = np.arange(lo, hi, dtype=np.int64)
    u_scores = np.full((count, m), n, dtype=np.int16)
    v_scores = np.full((count, n), m, dtype=np.int16)
    for pos in range(m * n):
        digit = (rem % 3).astype(np.intp)
        rem //= 3
        net = _NET[digit]
        u, v = divmod(pos, n)
        u_scores[:, u] += net
        v_scores[:, v] -= net
    return u_scores, v_scores


def _mask_column(mask: np.ndarray, scores: np.ndarray) -> None:
    one = np.int64(1)
    for col in range(scores.shape[1]):
        mask |= one << scores[:, col].astype(np.int64)


def _set_masks(u_scores: np.ndarray, v_scores: np.ndarray) -> np.ndarray:
    """Bitmask per assignment: bit s set iff some vertex scores s."""
    mask = np.zeros(u_scores.shape[0], dtype=np.int64)
    _mask_column(mask, u_scores)
    _mask_column(mask, v_scores)
    return mask


def _mask_of(values: Iterable[int]) -> int:
    return sum(1 << v for v in values)


def _values_of(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class Witness:
    """Shape plus assignment index pinning one realizing graph."""

    m: int
    n: int
    index: int

    def graph(self) -> BipartiteOrientedGraph:
        return EnumerationSpace(self.m, self.n).decode(self.index)


PairKey = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class RealizabilityCatalog:
    """Every realizable score set / sequence pair within shape bounds,
    each mapped to its first witness in (m, n, index) order."""

    m_max: int
    n_max: int
    sets: dict[tuple[int, ...], Witness] = field(default_factory=dict)
    pairs: dict[PairKey, Witness] = field(default_factory=dict)

    def records(self, kinds: tuple[str, ...] = ("set", "pair")) -> Iterator[dict]:
        """Catalog records, keys sorted lexicographically per kind."""
        if "set" in kinds:
            for key in sorted(self.sets):
                w = self.sets[key]
                yield {"kind": "set", "key": list(key), "m": w.m, "n": w.n, "index": str(w.index)}
        if "pair" in kinds:
            for key in sorted(self.pairs):
                w = self.pairs[key]
                yield {
                    "kind": "pair",
                    "key": [list(key[0]), list(key[1])],
                    "m": w.m,
                    "n": w.n,
                    "index": str(w.index),
                }

    def to_jsonl(self, kinds: tuple[str, ...] = ("set", "pair")) -> str:
        return "".join(json.dumps(rec, separators=(",", ":")) + "\n" for rec in self.records(kinds))

    @classmethod
    def from_jsonl(cls, text: str, m_max: int = 0, n_max: int = 0) -> "RealizabilityCatalog":
        catalog = cls(m_max, n_max)
        for line in text.splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            witness = Witness(rec["m"], rec["n"], int(rec["index"]))
            if rec["kind"] == "set":
                catalog.sets[tuple(rec["key"])] = witness
            elif rec["kind"] == "pair":
                catalog.pairs[(tuple(rec["key"][0]), tuple(rec["key"][1]))] = witness
            else:
                raise ValueError(f"unknown record kind: {rec['kind']!r}")
        return catalog


def catalog_for_shape(
    m: int,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk: int = _CHUNK,
    sets: bool = True,
    pairs: bool = True,
) -> RealizabilityCatalog:
    """Catalog of score sets and sequence pairs attained at one shape."""
    total = _require_budget(m, n, budget)
    catalog = RealizabilityCatalog(m, n)
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        u_scores, v_scores = _chunk_scores(m, n, lo, hi)
        if sets:
            masks = _set_masks(u_scores, v_scores)
            uniq, first = np.unique(masks, return_index=True)
            for mask_val, first_idx in zip(uniq.tolist(), first.tolist()):
                catalog.sets.setdefault(_values_of(mask_val), Witness(m, n, lo + first_idx))
        if pairs:
            rows = np.concatenate([np.sort(u_scores, axis=1), np.sort(v_scores, axis=1)], axis=1)
            uniq_rows, first = np.unique(rows, axis=0, return_index=True)
            for row, first_idx in zip(uniq_rows.tolist(), first.tolist()):
                key = (tuple(row[:m]), tuple(row[m:]))
                catalog.pairs.setdefault(key, Witness(m, n, lo + first_idx))
    return catalog


def _shapes(m_max: int, n_max: int) -> Iterator[tuple[int, int]]:
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            yield m, n


def realizable_sets_up_to(
    m_max: int,
    n_max: int,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk: int = _CHUNK,
) -> RealizabilityCatalog:
    """Merge per-shape catalogs over all shapes within the bounds."""
    if m_max < 1 or n_max < 1:
        raise ValueError("bounds must be at least 1")
    for m, n in _shapes(m_max, n_max):
        _require_budget(m, n, budget)
    catalog = RealizabilityCatalog(m_max, n_max)
    for m, n in _shapes(m_max, n_max):
        shape_catalog = catalog_for_shape(m, n, budget=budget, chunk=chunk)
        for key, witness in shape_catalog.sets.items():
            catalog.sets.setdefault(key, witness)
        for pair_key, witness in shape_catalog.pairs.items():
            catalog.pairs.setdefault(pair_key, witness)
    return catalog


def bounded_search(
    score_set: ScoreSet,
    m_max: int,
    n_max: int,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk: int = _CHUNK,
) -> BipartiteOrientedGraph | None:
    """First graph within the shape bounds whose score set equals the
    target, or None after exhausting every shape.

    A None answer certifies non-existence only within the bounds.
    Shapes that provably cannot work are skipped: a shape is hopeless
    when the target has more values than vertices or its maximum
    exceeds every attainable score.
    """
    values = tuple(score_set)
    if not values:
        raise ValueError("score set is empty")
    if m_max < 1 or n_max < 1:
        raise ValueError("bounds must be at least 1")
    for m, n in _shapes(m_max, n_max):
        _require_budget(m, n, budget)
    target = _mask_of(values)
    for m, n in _shapes(m_max, n_max):
        if len(values) > m + n or values[-1] > max(2 * m, 2 * n):
            continue
        total = space_size(m, n)
        for lo in range(0, total, chunk):
            hi = min(lo + chunk, total)
            u_scores, v_scores = _chunk_scores(m, n, lo, hi)
            masks = _set_masks(u_scores, v_scores)
            hits = np.nonzero(masks == target)[0]
            if hits.size:
                return EnumerationSpace(m, n).decode(lo + int(hits[0]))
    return None


@dataclass
class EquivalenceReport:
    """Outcome of testing the sequence-pair criterion at one shape."""

    m: int
    n: int
    necessity_ok: bool
    sufficiency_ok: bool
    counterexamples: list[tuple[str, tuple[int, ...], tuple[int, ...]]]


def criterion_equivalence(
    m: int,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk: int = _CHUNK,
) -> EquivalenceReport:
    """Test both directions of the sequence-pair criterion at one shape.

    Necessity: every enumerated graph's sequence pair passes the check.
    Sufficiency: every nondecreasing candidate pair with entries in
    [0, 2n] x [0, 2m] that passes the check is attained by some graph.
    """
    realized = set(
        catalog_for_shape(m, n, budget=budget, chunk=chunk, sets=False, pairs=True).pairs
    )
    counterexamples: list[tuple[str, tuple[int, ...], tuple[int, ...]]] = []
    for a, b in sorted(realized):
        if not check_bipartite_pair(ScoreSequencePair(a, b)).valid:
            counterexamples.append(("necessity", a, b))
    for a in combinations_with_replacement(range(2 * n + 1), m):
        for b in combinations_with_replacement(range(2 * m + 1), n):
            if (a, b) in realized:
                continue
            if check_bipartite_pair(ScoreSequencePair(a, b)).valid:
                counterexamples.append(("sufficiency", a, b))
    necessity_ok = all(kind != "necessity" for kind, _, _ in counterexamples)
    sufficiency_ok = all(kind != "sufficiency" for kind, _, _ in counterexamples)
    return EquivalenceReport(m, n, necessity_ok, sufficiency_ok, counterexamples)
