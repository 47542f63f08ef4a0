"""Small undirected simple graphs with bitset adjacency, plus graph6 I/O.

Vertices are dense integers ``0..n-1``.  Each vertex stores its neighborhood
as an integer bitmask, so neighborhood intersection and subset tests are a
couple of machine words.  Graphs are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64

__all__ = [
    "Graph",
    "Graph6Error",
    "parse_graph6",
    "write_graph6",
    "complete_graph",
    "empty_graph",
    "cycle_graph",
    "path_graph",
    "join",
    "induced_subgraph",
    "max_degree",
    "min_degree",
    "is_connected",
    "degeneracy_order",
]


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbors of ``v``.  The adjacency relation
    is validated to be symmetric and loop-free on construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{self.n - 1}")
            if mask & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if bool(self.adj[v] >> u & 1) != bool(self.adj[u] >> v & 1):
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            mask = self.adj[v] & ((1 << v) - 1)
            while mask:
                u = (mask & -mask).bit_length() - 1
                yield (u, v)
                mask &= mask - 1

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def neighbors(self, v: int) -> Iterator[int]:
        mask = self.adj[v]
        while mask:
            u = (mask & -mask).bit_length() - 1
            yield u
            mask &= mask - 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges())})"


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62; one graph per line)


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one short-form graph6 line.

    Raises :class:`Graph6Error` naming the byte offset for a malformed header
    byte, a truncated bit field, out-of-range payload bytes, trailing bytes,
    or nonzero padding bits.
    """
    if isinstance(line, str):
        data = line.encode("ascii", errors="replace")
    else:
        data = line
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 input")
    head = data[0]
    if head == 126:
        raise Graph6Error("long-form graph6 (>= 63 vertices) not supported", 0)
    if not 63 <= head <= 125:
        raise Graph6Error(f"malformed header byte {head!r}", 0)
    n = head - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated bit field: need {need} payload bytes, got {len(body)}",
            len(data),
        )
    if len(body) > need:
        raise Graph6Error("trailing garbage after graph6 payload", 1 + need)
    bits = 0
    for i, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"payload byte {byte!r} out of range", 1 + i)
        bits = bits << 6 | (byte - 63)
    total_bits = need * 6
    nbits = n * (n - 1) // 2
    pad = total_bits - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    adj = [0] * n
    pos = total_bits - 1
    for col in range(1, n):
        for row in range(col):
            if bits >> pos & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            pos -= 1
    return Graph(n, tuple(adj))


def write_graph6(graph: Graph) -> str:
    """Encode a graph as a short-form graph6 string (no trailing newline)."""
    n = graph.n
    if n > 62:
        raise ValueError("short-form graph6 supports at most 62 vertices")
    bits = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            bits = bits << 1 | (graph.adj[row] >> col & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    out = [chr(63 + n)]
    for shift in range(nbits - 6, -1, -6):
        out.append(chr(63 + (bits >> shift & 0x3F)))
    return "".join(out)


# ---------------------------------------------------------------------------
# constructions


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` plus all edges between the two sides.

    Vertices of ``a`` keep their indices; vertices of ``b`` are shifted by
    ``a.n``.
    """
    n = a.n + b.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would exceed {MAX_VERTICES} vertices")
    amask = (1 << a.n) - 1
    bmask = ((1 << n) - 1) & ~amask
    adj = [a.adj[v] | bmask for v in range(a.n)]
    adj.extend((b.adj[v] << a.n) | amask for v in range(b.n))
    return Graph(n, tuple(adj))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, re-indexed in ascending vertex order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range for n={graph.n}")
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for v in vs:
        mask = graph.adj[v]
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if u in index:
                adj[index[v]] |= 1 << index[u]
    return Graph(len(vs), tuple(adj))


def subgraph_mask(graph: Graph, mask: int) -> Graph:
    """Like :func:`induced_subgraph` but takes a vertex bitmask."""
    vs = []
    m = mask
    while m:
        vs.append((m & -m).bit_length() - 1)
        m &= m - 1
    return induced_subgraph(graph, vs)


def max_degree(graph: Graph) -> int:
    if graph.n == 0:
        return 0
    return max(graph.degree(v) for v in range(graph.n))


def min_degree(graph: Graph) -> int:
    if graph.n == 0:
        return 0
    return min(graph.degree(v) for v in range(graph.n))


def is_connected(graph: Graph) -> bool:
    if graph.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = graph.adj[v] & ~seen
        seen |= new
        frontier |= new
    return seen == (1 << graph.n) - 1


def degeneracy_order(graph: Graph) -> list[int]:
    """Smallest-last vertex order: each vertex has few earlier neighbors.

    Repeatedly removes a minimum-degree vertex (ties by smallest index) and
    returns the removal sequence reversed.
    """
    alive = (1 << graph.n) - 1
    removed = []
    for _ in range(graph.n):
        best = -1
        best_deg = graph.n + 1
        m = alive
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (graph.adj[v] & alive).bit_count()
            if d < best_deg:
                best_deg = d
                best = v
        removed.append(best)
        alive &= ~(1 << best)
    removed.reverse()
    return removed
