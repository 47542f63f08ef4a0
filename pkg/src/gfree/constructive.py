"""Constructive colorers behind the upper bounds.

* :func:`hall_color_or_violator` -- bipartite-matching colorer with class
  sizes at most delta; when it fails it extracts a deficient vertex set S
  with |S| > delta * |L(S)|, which certifies that no such coloring exists.
* :func:`greedy_list_color` -- sequential first-fit from lists, which always
  succeeds when every list has at least ceil(Delta/delta)+1 colors.
* :func:`color_ceil_n_over_delta` -- recursive colorer realizing the
  ceil(n/delta) choosability upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Coloring, ListAssignment
from .graphs import Graph, degeneracy_order, induced_subgraph
from .patterns import Pattern, anchored_bad_masks

__all__ = [
    "HallOutcome",
    "hall_color_or_violator",
    "greedy_list_color",
    "color_ceil_n_over_delta",
]


@dataclass(frozen=True)
class HallOutcome:
    """Either a coloring with every color used at most delta times, or a
    deficient vertex set with |S| > delta * |L(S)|.  Exactly one is set."""

    coloring: Coloring | None = None
    violator: frozenset[int] | None = None

    def __post_init__(self) -> None:
        if (self.coloring is None) == (self.violator is None):
            raise ValueError("exactly one of coloring/violator must be set")


def _max_matching(n_left: int, adj: list[list[int]], n_right: int):
    """Deterministic augmenting-path maximum matching.

    ``adj[u]`` lists right neighbors of left vertex u in fixed order.
    Returns (match_left, match_right) with -1 for unmatched.
    """
    match_left = [-1] * n_left
    match_right = [-1] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for w in adj[u]:
            if seen[w]:
                continue
            seen[w] = True
            if match_right[w] == -1 or augment(match_right[w], seen):
                match_left[u] = w
                match_right[w] = u
                return True
        return False

    for u in range(n_left):
        augment(u, [False] * n_right)
    return match_left, match_right


def hall_color_or_violator(
    graph: Graph, lists: ListAssignment, delta: int
) -> HallOutcome:
    """Color with every color used at most ``delta`` times, or exhibit why
    that is impossible.

    Builds the bipartite graph with the vertices on the left and ``delta``
    copies of every color on the right (vertex -- copy edge iff the color is
    in the vertex's list) and runs maximum matching.  A matching saturating
    the left side induces the coloring; otherwise the alternating-reachability
    set of an unmatched vertex is returned, and it satisfies
    ``|S| > delta * |L(S)|`` by the deficiency form of Hall's condition.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if lists.n != graph.n:
        raise ValueError("list assignment does not cover all vertices")
    n = graph.n
    universe = sorted(lists.universe)
    # right vertex id = color_index * delta + copy
    color_index = {c: i for i, c in enumerate(universe)}
    n_right = len(universe) * delta
    adj = [
        [color_index[c] * delta + r for c in sorted(lists.lists[v]) for r in range(delta)]
        for v in range(n)
    ]
    match_left, match_right = _max_matching(n, adj, n_right)
    unmatched = [v for v in range(n) if match_left[v] == -1]
    if not unmatched:
        assignment = tuple(universe[match_left[v] // delta] for v in range(n))
        return HallOutcome(coloring=Coloring(assignment))
    # deficiency set: alternating reachability from the first unmatched vertex
    start = unmatched[0]
    left_set = {start}
    frontier = [start]
    right_seen: set[int] = set()
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w in right_seen:
                    continue
                right_seen.add(w)
                mate = match_right[w]
                # mate != -1, else there would be an augmenting path
                if mate not in left_set:
                    left_set.add(mate)
                    nxt.append(mate)
        frontier = nxt
    return HallOutcome(violator=frozenset(left_set))


def greedy_list_color(
    graph: Graph,
    pattern: Pattern,
    lists: ListAssignment,
    order: list[int] | None = None,
) -> Coloring | None:
    """Sequential coloring: each vertex takes the first color of its list
    that keeps the color class free.  Returns None when some vertex has no
    feasible color -- a legitimate outcome for small lists, but guaranteed
    not to happen when every list has at least ceil(Delta/delta)+1 colors.

    The default order is smallest-last (degeneracy) so each vertex sees few
    earlier neighbors.
    """
    if lists.n != graph.n:
        raise ValueError("list assignment does not cover all vertices")
    if order is None:
        order = degeneracy_order(graph)
    elif sorted(order) != list(range(graph.n)):
        raise ValueError("order must be a permutation of the vertices")
    anchored = anchored_bad_masks(graph, pattern)
    class_masks: dict[int, int] = {}
    assignment = [-1] * graph.n
    for v in order:
        bit = 1 << v
        for c in sorted(lists.lists[v]):
            m = class_masks.get(c, 0) | bit
            if all(f & ~m for f in anchored[v]):
                class_masks[c] = m
                assignment[v] = c
                break
        else:
            return None
    return Coloring(tuple(assignment))


def color_ceil_n_over_delta(
    graph: Graph, pattern: Pattern, lists: ListAssignment
) -> Coloring:
    """Color from lists of size at least ceil(n/delta) with every class of at
    most delta vertices (hence automatically free).

    While some color is shared by at least delta remaining lists, the color
    shared by the most vertices (ties by smallest color id) is assigned to
    the delta smallest-index sharers and withdrawn from all other lists; once
    no color is that popular, the matching colorer finishes with classes of
    size at most delta, and in that regime it cannot fail.
    """
    delta = pattern.delta
    n = graph.n
    need = -(-n // delta)  # ceil
    if lists.n != n:
        raise ValueError("list assignment does not cover all vertices")
    for v in range(n):
        if len(lists.lists[v]) < need:
            raise ValueError(
                f"list at vertex {v} has {len(lists.lists[v])} colors, "
                f"needs at least ceil(n/delta) = {need}"
            )
    remaining = list(range(n))
    live: dict[int, set[int]] = {v: set(lists.lists[v]) for v in remaining}
    assignment: dict[int, int] = {}
    while remaining:
        counts: dict[int, int] = {}
        for v in remaining:
            for c in live[v]:
                counts[c] = counts.get(c, 0) + 1
        best = max(counts.items(), key=lambda kv: (kv[1], -kv[0]), default=None)
        if best is None or best[1] < delta:
            break
        color = best[0]
        sharers = [v for v in remaining if color in live[v]][:delta]
        for v in sharers:
            assignment[v] = color
            remaining.remove(v)
        for v in remaining:
            live[v].discard(color)
    if remaining:
        sub = induced_subgraph(graph, remaining)
        sub_lists = ListAssignment.of([live[v] for v in sorted(remaining)])
        outcome = hall_color_or_violator(sub, sub_lists, delta)
        if outcome.coloring is None:
            raise AssertionError(
                "matching phase cannot fail when no color is shared by delta lists"
            )
        for i, v in enumerate(sorted(remaining)):
            assignment[v] = outcome.coloring.assignment[i]
    return Coloring(tuple(assignment[v] for v in range(n)))
