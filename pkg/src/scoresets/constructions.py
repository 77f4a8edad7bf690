"""Builders that realize prescribed score sets.

Every builder lays each part out as a sequence of labeled blocks, wires
complete block-against-block dominations (plus two partial-domination
cases where only the lowest-indexed slice of a block is dominated), and
returns a Realization: the graph, the block layout with expected scores,
and the requested score set.

Covered families: singletons {a}, doubletons {a1, a2}, triples
{a1, a2, a3}, geometric progressions {a * d**i} with integer ratio
d >= 2, and arithmetic progressions {a + i * d}.  Whether every other
finite set of positive integers is realizable is open; ``realize``
refuses such inputs instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .criteria import check_bipartite_pair
from .graph_core import ArcState, BipartiteOrientedGraph, Block, ScoreSet


class UnsupportedScoreSetError(ValueError):
    """No known construction covers the requested score set."""


class RealizationError(RuntimeError):
    """A constructed graph failed its self-audit; indicates a builder bug."""


@dataclass(frozen=True)
class Singleton:
    a: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError("singleton value must be positive")


@dataclass(frozen=True)
class Doubleton:
    a1: int
    a2: int

    def __post_init__(self) -> None:
        if self.a1 < 1 or self.a1 >= self.a2:
            raise ValueError("need 1 <= a1 < a2")


@dataclass(frozen=True)
class Triple:
    a1: int
    a2: int
    a3: int

    def __post_init__(self) -> None:
        if self.a1 < 1 or not self.a1 < self.a2 < self.a3:
            raise ValueError("need 1 <= a1 < a2 < a3")


@dataclass(frozen=True)
class Geometric:
    a: int
    d: int
    n: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.d < 2 or self.n < 0:
            raise ValueError("need a >= 1, d >= 2, n >= 0")


@dataclass(frozen=True)
class Arithmetic:
    a: int
    d: int
    n: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.d < 1 or self.n < 0:
            raise ValueError("need a >= 1, d >= 1, n >= 0")


@dataclass(frozen=True)
class Unsupported:
    values: tuple[int, ...]


Family = Union[Singleton, Doubleton, Triple, Geometric, Arithmetic, Unsupported]


@dataclass(frozen=True)
class Realization:
    """A constructed graph plus its auditable block layout."""

    graph: BipartiteOrientedGraph
    u_blocks: tuple[Block, ...]
    v_blocks: tuple[Block, ...]
    requested: ScoreSet

    def verify(self) -> None:
        """Recompute every promise; raise RealizationError on mismatch."""
        g = self.graph
        for part, blocks, count, score_of in (
            ("U", self.u_blocks, g.m, g.score_u),
            ("V", self.v_blocks, g.n, g.score_v),
        ):
            pos = 0
            for blk in blocks:
                if blk.start != pos:
                    raise RealizationError(
                        f"{part} blocks do not tile the part: {blk.label} starts "
                        f"at {blk.start}, expected {pos}"
                    )
                pos = blk.stop
                if blk.score is None:
                    raise RealizationError(f"block {blk.label} has no expected score")
                for i in blk.indices():
                    got = score_of(i)
                    if got != blk.score:
                        raise RealizationError(
                            f"{part} vertex {i} in block {blk.label} scores {got}, "
                            f"expected {blk.score}"
                        )
            if pos != count:
                raise RealizationError(f"{part} blocks cover [0, {pos}), part has {count}")
        got_set = g.score_set()
        if got_set != self.requested:
            raise RealizationError(f"score set is {got_set}, requested {self.requested}")

    def to_json(self) -> str:
        return self.graph.to_json(u_blocks=self.u_blocks, v_blocks=self.v_blocks)

    def to_dot(self) -> str:
        return self.graph.to_dot(u_blocks=self.u_blocks, v_blocks=self.v_blocks)


class _PartLayout:
    """Accumulates labeled blocks along one part."""

    def __init__(self) -> None:
        self._blocks: list[Block] = []
        self.size = 0

    def add(self, label: str, size: int, score: int) -> range:
        if size < 0:
            raise AssertionError(f"block {label} would have negative size {size}")
        block = Block(label, self.size, self.size + size, score)
        self._blocks.append(block)
        self.size += size
        return block.indices()

    def blocks(self) -> tuple[Block, ...]:
        return tuple(self._blocks)


def build_singleton(a: int) -> Realization:
    """Realize {a} on parts of size a each.

    Both parts split into two blocks of size floor(a/2); each X block
    beats its matching Y block and loses to the other one, so every
    score is a.  Odd a adds one isolated vertex per part.
    """
    if a < 1:
        raise ValueError("singleton score must be positive; {0} is not realizable")
    half, odd = divmod(a, 2)
    uu, vv = _PartLayout(), _PartLayout()
    x1 = uu.add("X1", half, a)
    x2 = uu.add("X2", half, a)
    y1 = vv.add("Y1", half, a)
    y2 = vv.add("Y2", half, a)
    if odd:
        uu.add("x", 1, a)
        vv.add("y", 1, a)
    g = BipartiteOrientedGraph(uu.size, vv.size)
    g.set_arcs(x1, y1, ArcState.U_TO_V)
    g.set_arcs(x2, y2, ArcState.U_TO_V)
    g.set_arcs(x2, y1, ArcState.V_TO_U)
    g.set_arcs(x1, y2, ArcState.V_TO_U)
    return Realization(g, uu.blocks(), vv.blocks(), ScoreSet((a,)))


def build_doubleton(a1: int, a2: int) -> Realization:
    """Realize {a1, a2}: the {a1} graph plus a2 - a1 isolated U-vertices.

    The extra vertices leave U-scores at a1 and lift every V-score to a2.
    """
    if a1 < 1:
        raise ValueError("doubleton values must be positive")
    if a2 <= a1:
        raise ValueError(f"need a1 < a2, got {a1} >= {a2}")
    base = build_singleton(a1)
    g = base.graph.extend_u(a2 - a1)
    u_blocks = base.u_blocks + (Block("X", a1, a2, a1),)
    v_blocks = tuple(replace(b, score=a2) for b in base.v_blocks)
    return Realization(g, u_blocks, v_blocks, ScoreSet((a1, a2)))


def build_triple(a1: int, a2: int, a3: int) -> Realization:
    """Realize {a1, a2, a3} with a1 < a2 < a3, branching on a3 > 2*a2.

    Wide spread (a3 > 2*a2): blocks X1, X2 / Y1, Y2 of sizes a2,
    a3 - 2*a2, a1, a3 - 2*a1; X2 beats Y1 and Y2 beats X1.  Narrow
    spread: a single U block of size a2 whose lowest a3 - a2 vertices
    are beaten by every vertex of Y2.
    """
    if a1 < 1:
        raise ValueError("triple values must be positive")
    if not a1 < a2 < a3:
        raise ValueError(f"need a1 < a2 < a3, got {(a1, a2, a3)}")
    uu, vv = _PartLayout(), _PartLayout()
    g: BipartiteOrientedGraph
    if a3 > 2 * a2:
        x1 = uu.add("X1", a2, a1)
        x2 = uu.add("X2", a3 - 2 * a2, a3)
        y1 = vv.add("Y1", a1, a2)
        y2 = vv.add("Y2", a3 - 2 * a1, a3)
        g = BipartiteOrientedGraph(uu.size, vv.size)
        g.set_arcs(x2, y1, ArcState.U_TO_V)
        g.set_arcs(x1, y2, ArcState.V_TO_U)
    else:
        beaten = a3 - a2  # >= 1 and <= a2 because a2 < a3 <= 2*a2
        x1_beaten = uu.add("X1_dominated", beaten, a1)
        uu.add("X1_rest", a2 - beaten, a2)
        vv.add("Y1", a1, a2)
        y2 = vv.add("Y2", a2 - a1, a3)
        g = BipartiteOrientedGraph(uu.size, vv.size)
        g.set_arcs(x1_beaten, y2, ArcState.V_TO_U)
    return Realization(g, uu.blocks(), vv.blocks(), ScoreSet((a1, a2, a3)))


def build_geometric(a: int, d: int, n: int) -> Realization:
    """Realize {a, a*d, ..., a*d**n} for integer ratio d >= 2."""
    if a < 1:
        raise ValueError("leading value must be positive")
    if d < 2:
        raise ValueError("ratio must be at least 2")
    if n < 0:
        raise ValueError("term count must be nonnegative")
    if n == 0:
        return build_singleton(a)
    if n == 1:
        return build_doubleton(a, a * d)
    if d == 2:
        return _geometric_ratio2(a, n)
    return _geometric_layered(a, d, n)


def _geometric_layered(a: int, d: int, n: int) -> Realization:
    """Ratio d >= 3: a two-block base realizing {a, a*d}, then one new
    dominating layer per extra term.

    Each layer beats everything older on the opposite side: old scores
    are unchanged (the layer adds equally to the other part's size and
    to indegrees) and the layer itself scores a * d**e.
    """
    uu, vv = _PartLayout(), _PartLayout()
    x1 = uu.add("X1", a, a)
    x2 = uu.add("X2", a * d - 2 * a, a * d)
    y1 = vv.add("Y1", a, a)
    y2 = vv.add("Y2", a * d - 2 * a, a * d)
    part = a * d - a  # current size of each part
    layers = []
    for e in range(2, n + 1):
        target = a * d**e
        size = target - 2 * part
        if size <= 0:
            raise AssertionError(f"layer {e} size {size} must be positive for d >= 3")
        u_before, v_before = uu.size, vv.size
        xs = uu.add(f"X_layer{e}", size, target)
        ys = vv.add(f"Y_layer{e}", size, target)
        layers.append((u_before, v_before, xs, ys))
        part = target - part
    g = BipartiteOrientedGraph(uu.size, vv.size)
    g.set_arcs(x2, y1, ArcState.U_TO_V)
    g.set_arcs(x1, y2, ArcState.V_TO_U)
    for u_before, v_before, xs, ys in layers:
        g.set_arcs(xs, range(0, v_before), ArcState.U_TO_V)
        g.set_arcs(range(0, u_before), ys, ArcState.V_TO_U)
    values = tuple(a * d**i for i in range(n + 1))
    return Realization(g, uu.blocks(), vv.blocks(), ScoreSet(values))


def _geometric_ratio2(a: int, n: int) -> Realization:
    """Ratio 2, n >= 2: blocks indexed 0..n with index 2 absent from U
    and index 1 absent from V; higher block index beats lower.

    Block sizes: indices 0, 1, 2 have size a; for i >= 3 the size is
    2**i * a minus twice the total size of the lower U-side blocks.
    Every vertex of block i scores 2**i * a.
    """
    size = {0: a, 1: a, 2: a}
    acc = size[0] + size[1]  # lower U-side sizes (index 2 excluded)
    for i in range(3, n + 1):
        size[i] = 2**i * a - 2 * acc
        if size[i] <= 0:
            raise AssertionError(f"block {i} size {size[i]} must be positive")
        acc += size[i]
    u_indices = [0, 1] + list(range(3, n + 1))
    v_indices = [0, 2] + list(range(3, n + 1))
    uu, vv = _PartLayout(), _PartLayout()
    u_ranges = [(i, uu.add(f"X{i}", size[i], 2**i * a)) for i in u_indices]
    v_ranges = [(i, vv.add(f"Y{i}", size[i], 2**i * a)) for i in v_indices]
    g = BipartiteOrientedGraph(uu.size, vv.size)
    _wire_by_index(g, u_ranges, v_ranges)
    values = tuple(a * 2**i for i in range(n + 1))
    return Realization(g, uu.blocks(), vv.blocks(), ScoreSet(values))


def build_arithmetic(a: int, d: int, n: int) -> Realization:
    """Realize {a, a+d, ..., a+n*d} for positive difference d."""
    if a < 1:
        raise ValueError("leading value must be positive")
    if d < 1:
        raise ValueError("difference must be positive")
    if n < 0:
        raise ValueError("term count must be nonnegative")
    if d > a:
        return _arithmetic_wide(a, d, n)
    if d == a:
        return _arithmetic_equal(a, n)
    return _arithmetic_narrow(a, d, n)


def _arithmetic_wide(a: int, d: int, n: int) -> Realization:
    """d > a: blocks 0..n on both parts, sizes alternating a and d - a;
    higher block index beats lower.  Block i scores a + i*d."""
    uu, vv = _PartLayout(), _PartLayout()
    u_ranges = []
    v_ranges = []
    for i in range(n + 1):
        width = a if i % 2 == 0 else d - a
        u_ranges.append((i, uu.add(f"X{i}", width, a + i * d)))
        v_ranges.append((i, vv.add(f"Y{i}", width, a + i * d)))
    g = BipartiteOrientedGraph(uu.size, vv.size)
    _wire_by_index(g, u_ranges, v_ranges)
    values = tuple(a + i * d for i in range(n + 1))
    return Realization(g, uu.blocks(), vv.blocks(), ScoreSet(values))


def _arithmetic_equal(a: int, n: int) -> Realization:
    """d == a, so the target is {a, 2a, ..., (n+1)a}.

    U holds block 0 plus the odd-indexed blocks up to 2k-1, V holds the
    even-indexed blocks (up to 2k-2 for odd n, 2k for even n), all of
    size a.  Higher index beats lower except that block X0 is never
    beaten; X0 scores k*a for odd n and (k+1)*a for even n, every other
    block with index i scores (i+1)*a.
    """
    if n == 0:
        return build_singleton(a)
    k = (n + 1) // 2
    uu, vv = _PartLayout(), _PartLayout()
    x0_score = k * a if n % 2 else (k + 1) * a
    u_ranges = [(0, uu.add("X0", a, x0_score))]
    for i in range(1, 2 * k, 2):
        u_ranges.append((i, uu.add(f"X{i}", a, (i + 1) * a)))
    v_ranges = [(0, vv.add("Y0", a, a))]
    for j in range(2, n + 1, 2):
        v_ranges.append((j, vv.add(f"Y{j}", a, (j + 1) * a)))
    g = BipartiteOrientedGraph(uu.size, vv.size)
    for i, xs in u_ranges:
        for j, ys in v_ranges:
            if i > j:
                g.set_arcs(xs, ys, ArcState.U_TO_V)
            elif j > i > 0:
                g.set_arcs(xs, ys, ArcState.V_TO_U)
    values = tuple(a * (i + 1) for i in range(n + 1))
    return Realization(g, uu.blocks(), vv.blocks(), ScoreSet(values))


def _arithmetic_narrow(a: int, d: int, n: int) -> Realization:
    """d < a, n >= 2.  U holds block 0 (size a) plus odd-indexed blocks
    of size d; V holds block 0 (size a) plus even-indexed blocks of
    size d up to 2k where k = n // 2.

    Dominations: X_i beats Y_j for i > j > 1; every vertex of every
    X_i with odd i >= 3 beats the same lowest-indexed d vertices of
    Y0; Y_j beats X_i for j > i > 0.  That leaves X0 untouched at
    score a + k*d, X1 at a, X_i at a + i*d, the beaten slice of Y0 at
    a + d, the rest of Y0 at a + k*d (even n) or a + (k+1)*d (odd n),
    and Y_j at a + j*d.
    """
    if n == 0:
        return build_singleton(a)
    if n == 1:
        return build_doubleton(a, a + d)
    k = n // 2
    odd_top = n if n % 2 else n - 1
    uu, vv = _PartLayout(), _PartLayout()
    u_ranges = [(0, uu.add("X0", a, a + k * d))]
    for i in range(1, odd_top + 1, 2):
        score = a if i == 1 else a + i * d
        u_ranges.append((i, uu.add(f"X{i}", d, score)))
    y0_rest_score = a + k * d if n % 2 == 0 else a + (k + 1) * d
    y0_beaten = vv.add("Y0_dominated", d, a + d)
    vv.add("Y0_rest", a - d, y0_rest_score)
    y_ranges = []
    for j in range(2, 2 * k + 1, 2):
        y_ranges.append((j, vv.add(f"Y{j}", d, a + j * d)))
    g = BipartiteOrientedGraph(uu.size, vv.size)
    for i, xs in u_ranges[1:]:  # odd-indexed X blocks
        for j, ys in y_ranges:  # even-indexed Y blocks, j >= 2
            if i > j:
                g.set_arcs(xs, ys, ArcState.U_TO_V)
            else:
                g.set_arcs(xs, ys, ArcState.V_TO_U)
        if i >= 3:
            g.set_arcs(xs, y0_beaten, ArcState.U_TO_V)
    values = tuple(a + i * d for i in range(n + 1))
    return Realization(g, uu.blocks(), vv.blocks(), ScoreSet(values))


def _wire_by_index(
    g: BipartiteOrientedGraph,
    u_ranges: list[tuple[int, range]],
    v_ranges: list[tuple[int, range]],
) -> None:
    """Higher block index beats lower on both sides; equal index, no arc."""
    for i, xs in u_ranges:
        for j, ys in v_ranges:
            if i > j:
                g.set_arcs(xs, ys, ArcState.U_TO_V)
            elif j > i:
                g.set_arcs(xs, ys, ArcState.V_TO_U)


def classify(score_set: ScoreSet) -> Family:
    """Route a score set to its construction family.

    Small sets win over progression readings: sizes 1..3 classify as
    Singleton / Doubleton / Triple regardless of any progression
    structure.  Larger sets classify as Arithmetic (constant difference)
    before Geometric (constant exact integer ratio).
    """
    vals = score_set.values
    if not vals:
        raise ValueError("score set is empty")
    if vals[0] == 0:
        raise ValueError("score sets containing 0 are not realizable")
    if len(vals) == 1:
        return Singleton(vals[0])
    if len(vals) == 2:
        return Doubleton(vals[0], vals[1])
    if len(vals) == 3:
        return Triple(vals[0], vals[1], vals[2])
    diffs = {vals[i + 1] - vals[i] for i in range(len(vals) - 1)}
    if len(diffs) == 1:
        return Arithmetic(vals[0], diffs.pop(), len(vals) - 1)
    if all(vals[i + 1] % vals[i] == 0 for i in range(len(vals) - 1)):
        ratios = {vals[i + 1] // vals[i] for i in range(len(vals) - 1)}
        if len(ratios) == 1:
            return Geometric(vals[0], ratios.pop(), len(vals) - 1)
    return Unsupported(vals)


def build(family: Family) -> Realization:
    """Dispatch a classified family to its builder."""
    if isinstance(family, Singleton):
        return build_singleton(family.a)
    if isinstance(family, Doubleton):
        return build_doubleton(family.a1, family.a2)
    if isinstance(family, Triple):
        return build_triple(family.a1, family.a2, family.a3)
    if isinstance(family, Geometric):
        return build_geometric(family.a, family.d, family.n)
    if isinstance(family, Arithmetic):
        return build_arithmetic(family.a, family.d, family.n)
    if isinstance(family, Unsupported):
        raise UnsupportedScoreSetError(
            f"no construction covers {{{','.join(map(str, family.values))}}}: "
            "supported are sets of size 1-3 and geometric or arithmetic "
            "progressions; realizability of other sets is an open question"
        )
    raise TypeError(f"not a family: {family!r}")


def realize(score_set: ScoreSet) -> Realization:
    """Classify, build, and self-verify a realization of ``score_set``."""
    family = classify(score_set)
    result = build(family)
    result.verify()
    if result.requested != score_set:
        raise RealizationError(
            f"builder realized {result.requested}, caller asked for {score_set}"
        )
    verdict = check_bipartite_pair(result.graph.score_sequences())
    if not verdict.valid:
        raise RealizationError(
            f"constructed graph fails the sequence criterion at {verdict.witness}"
        )
    return result
