"""Exact solvers: free colorability, chromatic number, list colorability,
choosability, and the choosability number, all by pruned exhaustive search.

Everything here is deterministic: branch order is vertices by descending
degree (ties by index), classes/colors in ascending order, and the
choosability enumeration uses a fixed canonical order, so the first witness
found is a function of the instance and the budget alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernel
from .graphs import Graph, induced_subgraph
from .patterns import Pattern, anchored_bad_masks, is_free, max_free_induced_set

__all__ = [
    "Budget",
    "BudgetExceededError",
    "Coloring",
    "ListAssignment",
    "ChoosabilityResult",
    "is_k_colorable",
    "chi",
    "is_list_colorable",
    "is_k_choosable",
    "chi_list",
    "coloring_is_valid",
]

EXHAUSTIVE_LIMIT = 16  # solver host-size cap; acceptance corpora are smaller


class BudgetExceededError(RuntimeError):
    """Search exceeded its node or assignment budget."""

    def __init__(self, what: str, budget: "Budget"):
        self.what = what
        self.budget = budget
        super().__init__(
            f"{what} exceeded budget "
            f"(max_nodes={budget.max_nodes}, max_assignments={budget.max_assignments})"
        )


@dataclass(frozen=True)
class Budget:
    """Explicit search limits so failures are diagnosable, not silent hangs.

    ``max_nodes`` bounds attempted placements per coloring search;
    ``max_assignments`` bounds the reduced list assignments tested per
    choosability call.
    """

    max_nodes: int = 10_000_000
    max_assignments: int = 1_000_000

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_assignments <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Coloring:
    """Vertex -> class map.  Class labels are color ids for list colorings and
    dense 0-based indices for plain partitions."""

    assignment: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(set(self.assignment))

    @property
    def class_map(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for v, c in enumerate(self.assignment):
            out.setdefault(c, set()).add(v)
        return {c: frozenset(vs) for c, vs in sorted(out.items())}

    @property
    def classes(self) -> list[frozenset[int]]:
        return list(self.class_map.values())

    def class_sizes(self) -> list[int]:
        """Sizes in non-increasing order."""
        return sorted((len(c) for c in self.classes), reverse=True)


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists over small non-negative integer colors."""

    lists: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for v, lv in enumerate(self.lists):
            if not lv:
                raise ValueError(f"empty color list at vertex {v}")
            for c in lv:
                if not isinstance(c, int) or c < 0:
                    raise ValueError(f"color {c!r} at vertex {v} is not a non-negative int")

    @classmethod
    def of(cls, lists) -> "ListAssignment":
        return cls(tuple(frozenset(lv) for lv in lists))

    @classmethod
    def uniform(cls, n: int, colors) -> "ListAssignment":
        return cls(tuple(frozenset(colors) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.lists)

    @property
    def universe(self) -> frozenset[int]:
        out: set[int] = set()
        for lv in self.lists:
            out |= lv
        return frozenset(out)

    def union_over(self, vertices) -> frozenset[int]:
        out: set[int] = set()
        for v in vertices:
            out |= self.lists[v]
        return frozenset(out)

    def min_size(self) -> int:
        return min(len(lv) for lv in self.lists)


@dataclass(frozen=True)
class ChoosabilityResult:
    choosable: bool
    witness: ListAssignment | None = None
    assignments_tested: int = 0

    def __bool__(self) -> bool:
        return self.choosable


# ---------------------------------------------------------------------------


def _branch_order(graph: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))


def _check_host(graph: Graph) -> None:
    if graph.n > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"exact solvers are limited to {EXHAUSTIVE_LIMIT} vertices, got {graph.n}"
        )


def coloring_is_valid(graph: Graph, pattern: Pattern, coloring: Coloring) -> bool:
    """Independent validity check: every class induces a free subgraph.

    Goes through :func:`is_free` on the induced subgraph, not through the
    solvers' precomputed bad-mask tables.
    """
    if len(coloring.assignment) != graph.n:
        return False
    return all(
        is_free(induced_subgraph(graph, cls), pattern) for cls in coloring.classes
    )


def is_k_colorable(
    graph: Graph, pattern: Pattern, k: int, budget: Budget = DEFAULT_BUDGET
) -> Coloring | None:
    """A k-class free coloring if one exists (first in canonical branch
    order), else None."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_host(graph)
    if graph.n == 0:
        return Coloring(())
    anchored = anchored_bad_masks(graph, pattern)
    order = _branch_order(graph)
    st, assign, _ = kernel.search_partition(anchored, k, order, budget.max_nodes)
    if st == kernel.BUDGET:
        raise BudgetExceededError(f"{k}-colorability search", budget)
    if st == kernel.EXHAUSTED:
        return None
    return Coloring(tuple(assign))


def chi(graph: Graph, pattern: Pattern, budget: Budget = DEFAULT_BUDGET) -> int:
    """Free chromatic number: least k admitting a k-class free coloring."""
    if graph.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    _check_host(graph)
    free_size = len(max_free_induced_set(graph, pattern))
    lower = math.ceil(graph.n / free_size)
    for k in range(lower, graph.n + 1):
        if is_k_colorable(graph, pattern, k, budget) is not None:
            return k
    raise AssertionError("singleton classes always color the graph")


def is_list_colorable(
    graph: Graph,
    pattern: Pattern,
    lists: ListAssignment,
    budget: Budget = DEFAULT_BUDGET,
) -> Coloring | None:
    """An L-coloring with free classes if one exists; class labels are the
    color ids actually used."""
    _check_host(graph)
    if lists.n != graph.n:
        raise ValueError("list assignment does not cover all vertices")
    if graph.n == 0:
        return Coloring(())
    universe = sorted(lists.universe)
    dense = {c: i for i, c in enumerate(universe)}
    dense_lists = [tuple(dense[c] for c in sorted(lv)) for lv in lists.lists]
    anchored = anchored_bad_masks(graph, pattern)
    order = _branch_order(graph)
    st, assign, _ = kernel.search_list_coloring(
        anchored, dense_lists, order, budget.max_nodes
    )
    if st == kernel.BUDGET:
        raise BudgetExceededError("list-coloring search", budget)
    if st == kernel.EXHAUSTED:
        return None
    return Coloring(tuple(universe[c] for c in assign))


def is_k_choosable(
    graph: Graph, pattern: Pattern, k: int, budget: Budget = DEFAULT_BUDGET
) -> ChoosabilityResult:
    """Is every size-k list assignment colorable with free classes?

    Enumerates assignments over a universe of k*n colors reduced modulo color
    permutations (canonical signature refinement).  On a negative answer the
    first violating assignment in canonical order is returned.  ``k >= n`` is
    answered immediately: singleton classes are always available.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_host(graph)
    if graph.n == 0 or k >= graph.n:
        return ChoosabilityResult(True)
    anchored = anchored_bad_masks(graph, pattern)
    order = _branch_order(graph)
    st, witness, tested, _ = kernel.search_choosability(
        anchored, graph.n, k, order, budget.max_nodes, budget.max_assignments
    )
    if st == kernel.BUDGET:
        raise BudgetExceededError(f"{k}-choosability enumeration", budget)
    if st == kernel.EXHAUSTED:
        return ChoosabilityResult(False, ListAssignment.of(witness), tested)
    return ChoosabilityResult(True, None, tested)


def chi_list(graph: Graph, pattern: Pattern, budget: Budget = DEFAULT_BUDGET) -> int:
    """Free choosability number: least k such that the graph is k-choosable.

    Ascends from chi (a valid lower bound) and stops at ceil(n/delta), the
    constructive upper bound realized by
    :func:`gfree.constructive.color_ceil_n_over_delta`; when the two meet no
    enumeration is needed.
    """
    if graph.n < 1:
        raise ValueError("choosability number needs at least one vertex")
    _check_host(graph)
    cap = math.ceil(graph.n / pattern.delta)
    lower = chi(graph, pattern, budget)
    for k in range(lower, cap):
        if is_k_choosable(graph, pattern, k, budget):
            return k
    return cap
