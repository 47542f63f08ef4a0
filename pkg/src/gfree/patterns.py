"""Forbidden patterns: a single connected graph, or all d-regular graphs.

A color class is *free* when its induced subgraph contains no copy of the
pattern as a (not necessarily induced) subgraph.  For the family of all
d-regular graphs this means: no d-regular subgraph at all, so d=1 forbids
edges and d=2 forbids cycles.

The solvers do their incremental checking against *minimal bad sets*: the
inclusion-minimal vertex sets that host a copy of the pattern.  Any class
containing such a set (as a subset) is invalid, and a class of at most
``delta`` vertices can never contain one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    is_connected,
    min_degree,
    parse_graph6,
    path_graph,
)

__all__ = ["Pattern", "PatternError", "parse_pattern", "is_free", "max_free_induced_set"]


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    """Either a single forbidden graph or the family of all d-regular graphs.

    Exactly one of ``graph`` / ``regular_d`` is set.  ``delta`` is the minimum
    degree of the forbidden structure and drives the class-size gate.
    """

    graph: Graph | None = None
    regular_d: int | None = None
    literal: str | None = None

    def __post_init__(self) -> None:
        if (self.graph is None) == (self.regular_d is None):
            raise PatternError("pattern is either a single graph or a regular family")
        if self.graph is not None:
            if self.graph.num_edges() == 0:
                raise PatternError("forbidden graph must have at least one edge")
            if not is_connected(self.graph):
                raise PatternError("forbidden graph must be connected")
        else:
            if self.regular_d is None or self.regular_d < 1:
                raise PatternError("regular family needs d >= 1")

    @classmethod
    def forbid(cls, graph: Graph, literal: str | None = None) -> "Pattern":
        return cls(graph=graph, literal=literal)

    @classmethod
    def all_regular(cls, d: int) -> "Pattern":
        return cls(regular_d=d, literal=f"R:{d}")

    @property
    def delta(self) -> int:
        """Minimum degree of the forbidden structure (>= 1)."""
        if self.graph is not None:
            return min_degree(self.graph)
        assert self.regular_d is not None
        return self.regular_d

    def __str__(self) -> str:
        if self.literal:
            return self.literal
        if self.regular_d is not None:
            return f"R:{self.regular_d}"
        assert self.graph is not None
        from .graphs import write_graph6

        return f"g6:{write_graph6(self.graph)}"


_NAMED = re.compile(r"^([KCP])(\d+)$")


def parse_pattern(text: str) -> Pattern:
    """Parse a pattern literal: ``K3``, ``C5``, ``P4``, ``R:d`` or ``g6:<string>``."""
    text = text.strip()
    if text.startswith("R:"):
        try:
            d = int(text[2:])
        except ValueError:
            raise PatternError(f"bad regular-family literal {text!r}") from None
        return Pattern.all_regular(d)
    if text.startswith("g6:"):
        return Pattern.forbid(parse_graph6(text[3:]), literal=text)
    m = _NAMED.match(text)
    if not m:
        raise PatternError(
            f"unrecognized pattern literal {text!r} "
            "(expected Kn, Cn, Pn, R:d or g6:<string>)"
        )
    kind, num = m.group(1), int(m.group(2))
    if kind == "K":
        g = complete_graph(num)
    elif kind == "C":
        g = cycle_graph(num)
    else:
        g = path_graph(num)
    return Pattern.forbid(g, literal=text)


# ---------------------------------------------------------------------------
# containment


def _iter_bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def _connected_search_order(g: Graph) -> list[int]:
    """Order V(g) by descending degree so that each later vertex (after the
    first) has at least one earlier neighbor.  Assumes g connected."""
    if g.n == 0:
        return []
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order = [start]
    placed = 1 << start
    while len(order) < g.n:
        cand = [v for v in range(g.n) if not placed >> v & 1 and g.adj[v] & placed]
        nxt = max(cand, key=lambda v: (g.degree(v), -v))
        order.append(nxt)
        placed |= 1 << nxt
    return order


def _subgraph_embeddings(pattern: Graph, host: Graph, host_mask: int,
                         collect: set[int] | None) -> bool:
    """Backtracking injection of the pattern into host[host_mask] mapping edges
    to edges.  With ``collect`` set, records every image vertex-set mask and
    explores exhaustively; otherwise stops at the first embedding.

    Returns True iff at least one embedding exists.
    """
    m = pattern.n
    if m == 0:
        return True
    if host_mask.bit_count() < m:
        return False
    order = _connected_search_order(pattern)
    pdeg = [pattern.degree(v) for v in order]
    # earlier pattern-neighbors of order[i], as positions into `order`
    prev_nbrs: list[list[int]] = []
    pos_of = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        prev_nbrs.append([pos_of[u] for u in pattern.neighbors(v) if pos_of[u] < i])
    image = [0] * m
    used = 0
    found = False

    def rec(i: int) -> bool:
        nonlocal used, found
        if i == m:
            found = True
            if collect is not None:
                collect.add(used)
                return False  # keep enumerating
            return True
        if prev_nbrs[i]:
            cand = host_mask & ~used
            for j in prev_nbrs[i]:
                cand &= host.adj[image[j]]
        else:
            cand = host_mask & ~used
        for w in _iter_bits(cand):
            if host.degree(w) < pdeg[i]:
                continue
            # all earlier pattern-neighbors must map to host-neighbors of w
            ok = True
            for j in prev_nbrs[i]:
                if not host.adj[w] >> image[j] & 1:
                    ok = False
                    break
            if not ok:
                continue
            image[i] = w
            used |= 1 << w
            if rec(i + 1):
                return True
            used &= ~(1 << w)
        return False

    rec(0)
    return found


def _has_spanning_regular(host: Graph, mask: int, d: int) -> bool:
    """True iff host[mask] has a spanning d-regular subgraph (sub-edge-set with
    every vertex of the mask at degree exactly d)."""
    vs = list(_iter_bits(mask))
    if len(vs) < d + 1:
        return False
    idx = {v: i for i, v in enumerate(vs)}
    k = len(vs)
    nbrs = []
    for v in vs:
        am = host.adj[v] & mask
        nbrs.append(sorted(idx[u] for u in _iter_bits(am)))
    return _regular_backtrack(k, nbrs, d)


def _regular_backtrack(k: int, nbrs: list[list[int]], d: int) -> bool:
    need = [d] * k

    def rec(i: int) -> bool:
        if i == k:
            return True
        if need[i] == 0:
            return rec(i + 1)
        avail = [j for j in nbrs[i] if j > i and need[j] > 0]
        if len(avail) < need[i]:
            return False
        want = need[i]
        for pick in combinations(avail, want):
            need[i] = 0
            for j in pick:
                need[j] -= 1
            if rec(i + 1):
                return True
            for j in pick:
                need[j] += 1
            need[i] = want
        return False

    return rec(0)


def _has_cycle(graph: Graph, mask: int) -> bool:
    """DFS cycle check on graph[mask]."""
    seen = 0
    for s in _iter_bits(mask):
        if seen >> s & 1:
            continue
        stack = [(s, -1)]
        seen |= 1 << s
        while stack:
            v, parent = stack.pop()
            skipped_parent = False
            for u in _iter_bits(graph.adj[v] & mask):
                if u == parent and not skipped_parent:
                    skipped_parent = True
                    continue
                if seen >> u & 1:
                    return True
                seen |= 1 << u
                stack.append((u, v))
    return False


def is_free(host: Graph, pattern: Pattern) -> bool:
    """True iff host contains no copy of the forbidden structure as a subgraph.

    d=1 regular families reduce to an edge check and d=2 to acyclicity; a
    single graph runs a backtracking subgraph-containment search.
    """
    full = (1 << host.n) - 1
    if pattern.regular_d is not None:
        d = pattern.regular_d
        if d == 1:
            return host.num_edges() == 0
        if d == 2:
            return not _has_cycle(host, full)
        for size in range(d + 1, host.n + 1):
            for combo in combinations(range(host.n), size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                if _has_spanning_regular(host, mask, d):
                    return False
        return True
    assert pattern.graph is not None
    return not _subgraph_embeddings(pattern.graph, host, full, None)


# ---------------------------------------------------------------------------
# minimal bad sets


def minimal_bad_masks(host: Graph, pattern: Pattern) -> tuple[int, ...]:
    """Inclusion-minimal vertex sets of ``host`` hosting a copy of the pattern.

    A vertex set is a valid (free) color class iff it contains none of these
    masks.  Sorted ascending for determinism.
    """
    bad: set[int] = set()
    if pattern.regular_d is not None:
        d = pattern.regular_d
        if d == 1:
            for u, v in host.edges():
                bad.add(1 << u | 1 << v)
            return tuple(sorted(bad))
        for size in range(d + 1, host.n + 1):
            for combo in combinations(range(host.n), size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                if _has_spanning_regular(host, mask, d):
                    bad.add(mask)
    else:
        assert pattern.graph is not None
        _subgraph_embeddings(pattern.graph, host, (1 << host.n) - 1, bad)
    # keep inclusion-minimal masks only
    by_size = sorted(bad, key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for m in by_size:
        if not any(f & ~m == 0 for f in minimal):
            minimal.append(m)
    return tuple(sorted(minimal))


def anchored_bad_masks(host: Graph, pattern: Pattern) -> list[tuple[int, ...]]:
    """Per-vertex view of :func:`minimal_bad_masks`: entry v lists the minimal
    bad sets containing v.  Used for incremental class checks."""
    masks = minimal_bad_masks(host, pattern)
    return [tuple(m for m in masks if m >> v & 1) for v in range(host.n)]


def mask_is_free(mask: int, bad_masks: tuple[int, ...]) -> bool:
    return all(f & ~mask for f in bad_masks)


def max_free_induced_set(host: Graph, pattern: Pattern) -> frozenset[int]:
    """A maximum-cardinality vertex set whose induced subgraph is free.

    Exhaustive search from the top size down; among maximum sets the
    lexicographically smallest vertex tuple is returned.
    """
    bad = minimal_bad_masks(host, pattern)
    full = (1 << host.n) - 1
    if mask_is_free(full, bad):
        return frozenset(range(host.n))
    for size in range(host.n - 1, 0, -1):
        for combo in combinations(range(host.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if mask_is_free(mask, bad):
                return frozenset(combo)
    return frozenset()
