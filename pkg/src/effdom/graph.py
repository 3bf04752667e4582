"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency rows.

A vertex set is a Python ``int`` used as a bitmask (bit ``v`` set means
vertex ``v`` is in the set). Helpers below convert between masks and
sorted tuples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import math

MAX_VERTICES = 64

INF = math.inf
"""Distance between vertices in different components."""


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


class CapacityError(ValueError):
    """Raised when an operation is asked to handle more vertices than it supports."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def _as_mask(s) -> int:
    return s if isinstance(s, int) else to_mask(s)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adj[v]`` is the neighbor bitmask of ``v``. Instances are validated on
    construction and never mutated; every operation returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph has {self.n} vertices; supported range is 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor index >= {self.n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return to_tuple(self.adj[v])

    @property
    def n_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    if not isinstance(n, int) or n < 0:
        raise GraphError(f"vertex count must be a nonnegative integer, got {n!r}")
    if n > MAX_VERTICES:
        raise CapacityError(f"graph has {n} vertices; at most {MAX_VERTICES} are supported")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in bits(g.adj[u]):
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    """Hop distances between all vertex pairs; ``INF`` across components."""
    return [bfs_distances(g, v) for v in range(g.n)]


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining pairs at distance 1 or 2."""
    rows = []
    for v in range(g.n):
        reach = g.adj[v]
        for u in bits(g.adj[v]):
            reach |= g.adj[u]
        rows.append(reach & ~(1 << v))
    return Graph(g.n, tuple(rows))


def domination_weights(g: Graph) -> list[int]:
    """Closed-neighborhood sizes, ``deg(v) + 1`` for each vertex."""
    return [row.bit_count() + 1 for row in g.adj]


def closed_neighborhood(g: Graph, v: int) -> int:
    """Bitmask of ``{v}`` together with the neighbors of ``v``."""
    return g.adj[v] | 1 << v


def is_independent(g: Graph, s) -> bool:
    mask = _as_mask(s)
    return all(not g.adj[v] & mask for v in bits(mask))


def is_dominating(g: Graph, s) -> bool:
    mask = _as_mask(s)
    covered = mask
    for v in bits(mask):
        covered |= g.adj[v]
    return covered == g.vertex_mask


def induced_subgraph(g: Graph, s) -> Graph:
    """Subgraph induced by ``s``, relabeled ``0..|s|-1`` by ascending original index."""
    keep = to_tuple(_as_mask(s))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


def pair_index(i: int, j: int) -> int:
    """Position of pair ``{i, j}`` in column-major upper-triangle order.

    Order is (0,1), (0,2), (1,2), (0,3), ... which is the graph6 bit order.
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def to_bitmask(g: Graph) -> int:
    """Encode the upper adjacency triangle as an integer (bit ``pair_index(i, j)``)."""
    code = 0
    for i, j in g.edges():
        code |= 1 << pair_index(i, j)
    return code


def from_bitmask(n: int, code: int) -> Graph:
    adj = [0] * n
    for j in range(1, n):
        base = j * (j - 1) // 2
        for i in range(j):
            if code >> (base + i) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))
