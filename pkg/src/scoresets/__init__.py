"""Score-set realization and verification for oriented bipartite graphs."""

from .graph_core import (
    ArcState,
    BipartiteOrientedGraph,
    Block,
    ScoreSequencePair,
    ScoreSet,
)
from .criteria import (
    CriterionVerdict,
    Violation,
    check_bipartite_pair,
    check_oriented_scores,
)
from .constructions import (
    Arithmetic,
    Doubleton,
    Family,
    Geometric,
    Realization,
    RealizationError,
    Singleton,
    Triple,
    Unsupported,
    UnsupportedScoreSetError,
    build,
    build_arithmetic,
    build_doubleton,
    build_geometric,
    build_singleton,
    build_triple,
    classify,
    realize,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    EnumerationSpace,
    EquivalenceReport,
    RealizabilityCatalog,
    Witness,
    bounded_search,
    catalog_for_shape,
    criterion_equivalence,
    enumerate_graphs,
    realizable_sets_up_to,
    space_size,
)

__version__ = "0.1.0"

__all__ = [
    "ArcState",
    "Arithmetic",
    "BipartiteOrientedGraph",
    "Block",
    "BudgetExceededError",
    "CriterionVerdict",
    "DEFAULT_BUDGET",
    "Doubleton",
    "EnumerationSpace",
    "EquivalenceReport",
    "Family",
    "Geometric",
    "RealizabilityCatalog",
    "Realization",
    "RealizationError",
    "ScoreSequencePair",
    "ScoreSet",
    "Singleton",
    "Triple",
    "Unsupported",
    "UnsupportedScoreSetError",
    "Violation",
    "Witness",
    "bounded_search",
    "build",
    "build_arithmetic",
    "build_doubleton",
    "build_geometric",
    "build_singleton",
    "build_triple",
    "catalog_for_shape",
    "check_bipartite_pair",
    "check_oriented_scores",
    "classify",
    "criterion_equivalence",
    "enumerate_graphs",
    "realizable_sets_up_to",
    "realize",
    "space_size",
]
