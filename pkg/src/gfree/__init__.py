"""Conditional graph coloring: exact G-free chromatic and choosability
numbers on small graphs, the constructive colorers behind their upper
bounds, and verifiers that check those bounds on graph corpora."""

from .exact import (
    Budget,
    BudgetExceededError,
    ChoosabilityResult,
    Coloring,
    ListAssignment,
    chi,
    chi_list,
    coloring_is_valid,
    is_k_choosable,
    is_k_colorable,
    is_list_colorable,
)
from .graphs import (
    Graph,
    Graph6Error,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    join,
    max_degree,
    min_degree,
    parse_graph6,
    path_graph,
    write_graph6,
)
from .constructive import (
    HallOutcome,
    color_ceil_n_over_delta,
    greedy_list_color,
    hall_color_or_violator,
)
from .patterns import Pattern, PatternError, is_free, max_free_induced_set, parse_pattern

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceededError",
    "ChoosabilityResult",
    "Coloring",
    "Graph",
    "Graph6Error",
    "HallOutcome",
    "ListAssignment",
    "Pattern",
    "PatternError",
    "chi",
    "chi_list",
    "color_ceil_n_over_delta",
    "coloring_is_valid",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "greedy_list_color",
    "hall_color_or_violator",
    "induced_subgraph",
    "is_free",
    "is_k_choosable",
    "is_k_colorable",
    "is_list_colorable",
    "join",
    "max_degree",
    "max_free_induced_set",
    "min_degree",
    "parse_graph6",
    "parse_pattern",
    "path_graph",
    "write_graph6",
]
