"""Shift-chain hypergraphs: construction, validation, coloring and search."""

from .coloring import (
    Coloring,
    Mode,
    SearchOutcome,
    backtracking_search,
    degeneracy_order,
    exhaustive_search,
    greedy_proper_3,
    level_coloring_3,
    is_polychromatic,
    is_proper,
)
from .constructions import (
    ConstructionTrace,
    construct_theorem1,
    enumerate_shift_chains,
    iter_shift_chains,
    random_shift_chain,
)
from .core import (
    Comparison,
    OrderedHypergraph,
    ShiftChain,
    compare,
    edge_bound,
    restrict,
    union,
    validate_shift_chain,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "Coloring",
    "Comparison",
    "ConstructionTrace",
    "Mode",
    "OrderedHypergraph",
    "SearchOutcome",
    "ShiftChain",
    "backtracking_search",
    "compare",
    "construct_theorem1",
    "degeneracy_order",
    "edge_bound",
    "enumerate_shift_chains",
    "exhaustive_search",
    "greedy_proper_3",
    "level_coloring_3",
    "is_polychromatic",
    "is_proper",
    "iter_shift_chains",
    "random_shift_chain",
    "restrict",
    "union",
    "validate_shift_chain",
]
