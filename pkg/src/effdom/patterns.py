"""Named forbidden patterns and induced-subgraph detection.

An embedding of a pattern ``P`` in a host ``G`` is a tuple ``emb`` with
``emb[i]`` the host vertex playing pattern vertex ``i``. It is *induced*:
``ij`` is a pattern edge exactly when ``emb[i] emb[j]`` is a host edge.

Detection backtracks over the pattern vertices in a fixed search order and
tries host candidates in ascending index. The search order starts at a
vertex of maximum degree and then repeatedly takes the unplaced vertex with
the most already-placed neighbors (ties: higher degree, then lower index).
Because candidates are tried in ascending order, the embedding returned is
the lexicographically least one when read as the host tuple
``(emb[order[0]], emb[order[1]], ...)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .graph import Graph, from_edge_list, path_graph, cycle_graph

Embedding = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    description: str = field(default="", compare=False)

    @cached_property
    def order(self) -> tuple[int, ...]:
        return _search_order(self.graph)

    @cached_property
    def _plan(self):
        # per step: (pattern vertex, min host degree, ((earlier step, is_edge), ...))
        g = self.graph
        order = self.order
        steps = []
        for s, pv in enumerate(order):
            checks = tuple((j, g.has_edge(order[j], pv)) for j in range(s))
            steps.append((pv, g.degree(pv), checks))
        return tuple(steps)

    @cached_property
    def _forward(self):
        # per step: ((later step, is_edge), ...)
        g = self.graph
        order = self.order
        return tuple(
            tuple((t, g.has_edge(order[s], order[t])) for t in range(s + 1, len(order)))
            for s in range(len(order))
        )

    @cached_property
    def _degree_sequence(self) -> list[int]:
        return sorted(self.graph.degrees())


def _search_order(g: Graph) -> tuple[int, ...]:
    deg = g.degrees()
    placed: list[int] = []
    placed_mask = 0
    remaining = set(range(g.n))
    while remaining:
        v = min(remaining, key=lambda u: (-(g.adj[u] & placed_mask).bit_count(), -deg[u], u))
        placed.append(v)
        placed_mask |= 1 << v
        remaining.discard(v)
    return tuple(placed)


def _build_catalog() -> dict[str, Pattern]:
    entries = [
        Pattern("P4", path_graph(4), "path on 4 vertices"),
        Pattern("P5", path_graph(5), "path on 5 vertices"),
        Pattern("P6", path_graph(6), "path on 6 vertices"),
        Pattern("P7", path_graph(7), "path on 7 vertices"),
        Pattern("C4", cycle_graph(4), "chordless 4-cycle"),
        Pattern("claw", from_edge_list(4, [(0, 1), (0, 2), (0, 3)]), "K_{1,3}, center 0"),
        Pattern(
            "banner",
            from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
            "4-cycle 0-1-2-3 plus vertex 4 adjacent to 0 only",
        ),
        Pattern(
            "bull",
            from_edge_list(5, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
            "triangle 0-1-2 with pendants 3 on 1 and 4 on 2",
        ),
        Pattern(
            "S113",
            from_edge_list(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]),
            "subdivided claw with arms of length 1, 1, 3 from center 0",
        ),
        Pattern(
            "S122",
            from_edge_list(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]),
            "subdivided claw with arms of length 1, 2, 2 from center 0",
        ),
        Pattern(
            "2P3",
            from_edge_list(6, [(0, 1), (1, 2), (3, 4), (4, 5)]),
            "two disjoint paths on 3 vertices",
        ),
    ]
    return {p.name: p for p in entries}


_CATALOG = _build_catalog()

PAPER_CLASS = ("P6", "banner")


def catalog() -> list[Pattern]:
    return list(_CATALOG.values())


def get_pattern(name: str) -> Pattern:
    try:
        return _CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}; known: {', '.join(_CATALOG)}") from None


def resolve_patterns(ps: Iterable[Pattern | str]) -> list[Pattern]:
    return [get_pattern(p) if isinstance(p, str) else p for p in ps]


def _degree_masks(g: Graph) -> list[int]:
    # entry t: vertices of degree >= t, for t = 0..n
    masks = [0] * (g.n + 1)
    for v, row in enumerate(g.adj):
        masks[row.bit_count()] |= 1 << v
    for t in range(g.n - 1, -1, -1):
        masks[t] |= masks[t + 1]
    return masks


def find_induced(g: Graph, p: Pattern | str, _degree_index: Optional[list[int]] = None) -> Optional[Embedding]:
    """Return the least induced embedding of ``p`` in ``g``, or ``None``.

    Each unplaced pattern vertex keeps a candidate bitmask that is narrowed
    (edge rows for pattern neighbors, complemented rows for non-neighbors)
    every time a vertex is placed; a branch dies as soon as any candidate
    mask empties.
    """
    if isinstance(p, str):
        p = get_pattern(p)
    k = p.graph.n
    if k > g.n:
        return None
    if k == 0:
        return ()
    if k == g.n and sorted(g.degrees()) != p._degree_sequence:
        return None
    plan = p._plan
    forward = p._forward
    rows = g.adj
    at_least = _degree_index if _degree_index is not None else _degree_masks(g)
    images = [0] * k

    def extend(step: int, domains: list[int]) -> bool:
        cand = domains[step]
        if step + 1 == k:
            if cand:
                images[step] = (cand & -cand).bit_length() - 1
                return True
            return False
        links = forward[step]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            row = rows[v]
            nxt = domains[:]
            for s, edge in links:
                d = nxt[s] & ~low
                d = d & row if edge else d & ~row
                if not d:
                    break
                nxt[s] = d
            else:
                images[step] = v
                if extend(step + 1, nxt):
                    return True
            cand ^= low
        return False

    domains = [at_least[need] for _, need, _ in plan]
    if not all(domains) or not extend(0, domains):
        return None
    emb = [0] * k
    for step, (pv, _, _) in enumerate(plan):
        emb[pv] = images[step]
    return tuple(emb)


def is_induced_embedding(g: Graph, p: Pattern, emb: Sequence[int]) -> bool:
    """Direct edge-by-edge check of an embedding, independent of the search."""
    k = p.graph.n
    if len(emb) != k or len(set(emb)) != k:
        return False
    if any(not 0 <= v < g.n for v in emb):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if p.graph.has_edge(i, j) != g.has_edge(emb[i], emb[j]):
                return False
    return True


def is_f_free(g: Graph, ps: Iterable[Pattern | str]) -> tuple[bool, Optional[tuple[Pattern, Embedding]]]:
    """Check ``g`` against each pattern in turn; report the first witness found."""
    index = _degree_masks(g)
    for p in resolve_patterns(ps):
        emb = find_induced(g, p, index)
        if emb is not None:
            return False, (p, emb)
    return True, None


@dataclass(frozen=True)
class ClassReport:
    free: dict[str, bool]
    """Pattern name -> True when the graph has no induced copy of it."""

    @property
    def p6_banner_free(self) -> bool:
        return all(self.free[name] for name in PAPER_CLASS)

    def lines(self) -> list[str]:
        out = [f"{name}-free={str(ok).lower()}" for name, ok in self.free.items()]
        out.append(f"(P6,banner)-free={str(self.p6_banner_free).lower()}")
        return out


def class_report(g: Graph) -> ClassReport:
    index = _degree_masks(g)
    return ClassReport({p.name: find_induced(g, p, index) is None for p in catalog()})


def labeled_copies(p: Pattern) -> set[int]:
    """Upper-triangle codes of every relabeling of ``p`` onto ``0..k-1``."""
    from itertools import permutations

    from .graph import relabel, to_bitmask

    return {to_bitmask(relabel(p.graph, list(perm))) for perm in permutations(range(p.graph.n))}


__all__ = [
    "Embedding",
    "Pattern",
    "ClassReport",
    "PAPER_CLASS",
    "catalog",
    "get_pattern",
    "resolve_patterns",
    "find_induced",
    "is_induced_embedding",
    "is_f_free",
    "class_report",
    "labeled_copies",
    "contains_table",
]


def contains_table(n: int, p: Pattern | str):
    """Boolean array over every labeled graph on ``n`` vertices: contains ``p``?

    Entry ``code`` refers to the graph whose upper-triangle bitmask is
    ``code`` (see ``graph.to_bitmask``). Each ``k``-subset of vertices is
    projected to its induced code and looked up among all relabelings of
    the pattern. Used to pre-filter exhaustive corpora in bulk.
    """
    from itertools import combinations

    import numpy as np

    from .graph import pair_index

    if isinstance(p, str):
        p = get_pattern(p)
    k = p.graph.n
    m = n * (n - 1) // 2
    codes = np.arange(1 << m, dtype=np.int64)
    hit = np.zeros(1 << m, dtype=bool)
    if k > n:
        return hit
    lut = np.zeros(1 << (k * (k - 1) // 2), dtype=bool)
    lut[sorted(labeled_copies(p))] = True
    for subset in combinations(range(n), k):
        sub = np.zeros(1 << m, dtype=np.int64)
        for b in range(1, k):
            for a in range(b):
                src = pair_index(subset[a], subset[b])
                sub |= ((codes >> src) & 1) << pair_index(a, b)
        hit |= lut[sub]
    return hit
