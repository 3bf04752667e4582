"""Exact maximum-weight independent set and minimum-weight dominating set.

``mwis_exact`` is the branch-and-bound engine behind the square-graph EDS
decider. ``mwis_oracle`` and ``mwds_exact`` are oracle-grade solvers for
small graphs (n <= 24) used to cross-check it.

All weights are nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import CapacityError, Graph, bits, to_mask, to_tuple

ORACLE_MAX_VERTICES = 24


@dataclass(frozen=True)
class SolveResult:
    vertices: tuple[int, ...]
    weight: int
    nodes_explored: int = 0

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)


def _check_weights(g: Graph, w: Sequence[int]) -> list[int]:
    w = [int(x) for x in w]
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    return w


def _mask_weight(w: Sequence[int], mask: int) -> int:
    return sum(w[v] for v in bits(mask))


class _BranchAndBound:
    """Search state for one MWIS call; not shared between calls."""

    def __init__(self, rows: Sequence[int], w: Sequence[int]):
        self.rows = rows
        self.w = w
        self.nodes = 0

    def solve(self, mask: int, floor: int = -1) -> tuple[int, int] | None:
        """Best ``(weight, set)`` inside ``mask`` with weight > ``floor``, else None."""
        self.best = floor
        self.best_set = None
        self._search(mask, 0, 0)
        if self.best_set is None:
            return None
        return self.best, self.best_set

    def _search(self, mask: int, weight: int, chosen: int) -> None:
        self.nodes += 1
        rows, w = self.rows, self.w
        # Reductions: isolated vertices, and vertices at least as heavy as
        # their whole open neighborhood, belong to some optimum.
        changed = True
        while changed and mask:
            changed = False
            for v in bits(mask):
                if not mask >> v & 1:
                    continue
                nb = rows[v] & mask
                if not nb or w[v] >= _mask_weight(w, nb):
                    weight += w[v]
                    chosen |= 1 << v
                    mask &= ~(nb | 1 << v)
                    changed = True
        if not mask:
            if weight > self.best:
                self.best = weight
                self.best_set = chosen
            return
        if weight + _mask_weight(w, mask) <= self.best:
            return
        pivot, top = -1, -1
        for v in bits(mask):
            d = (rows[v] & mask).bit_count()
            if d > top:
                pivot, top = v, d
        bit = 1 << pivot
        self._search(mask & ~(rows[pivot] | bit), weight + w[pivot], chosen | bit)
        self._search(mask & ~bit, weight, chosen)


def mwis_exact(g: Graph, w: Sequence[int]) -> SolveResult:
    """Maximum-weight independent set by branch and bound.

    Among optimal sets the one whose sorted vertex tuple is lexicographically
    least is returned. The optimum weight is found first; the set is then
    fixed vertex by vertex in ascending order, keeping each vertex when some
    optimal set extends the current choice with it.
    """
    w = _check_weights(g, w)
    rows = g.adj
    bb = _BranchAndBound(rows, w)
    target, witness = bb.solve(g.vertex_mask)

    chosen, chosen_weight = 0, 0
    blocked = 0
    for v in range(g.n):
        if chosen_weight == target:
            break
        bit = 1 << v
        if blocked & bit:
            continue
        if not witness & bit:
            rest = g.vertex_mask & ~((bit << 1) - 1) & ~blocked & ~rows[v]
            need = target - chosen_weight - w[v]
            found = bb.solve(rest, need - 1)
            if found is None:
                continue
            witness = chosen | bit | found[1]
        chosen |= bit
        chosen_weight += w[v]
        blocked |= rows[v]
    return SolveResult(to_tuple(chosen), chosen_weight, bb.nodes)


def _subset_table(g: Graph, w: Sequence[int], start: int, stop: int):
    masks = np.arange(start, stop, dtype=np.int64)
    member = [(masks >> v) & 1 for v in range(g.n)]
    weight = np.zeros(len(masks), dtype=np.int64)
    for v in range(g.n):
        if w[v]:
            weight += member[v] * w[v]
    return masks, member, weight


def _least_tuple(masks) -> tuple[int, ...]:
    return min(to_tuple(int(m)) for m in masks)


def mwis_oracle(g: Graph, w: Sequence[int]) -> SolveResult:
    """Maximum-weight independent set by scoring every one of the 2^n subsets."""
    if g.n > ORACLE_MAX_VERTICES:
        raise CapacityError(f"oracle supports at most {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    w = _check_weights(g, w)
    edges = g.edges()
    best, best_masks = -1, []
    chunk = 1 << 18
    for start in range(0, 1 << g.n, chunk):
        masks, member, weight = _subset_table(g, w, start, min(start + chunk, 1 << g.n))
        ok = np.ones(len(masks), dtype=bool)
        for u, v in edges:
            ok &= (member[u] & member[v]) == 0
        weight = np.where(ok, weight, -1)
        top = int(weight.max())
        if top > best:
            best, best_masks = top, [masks[weight == top]]
        elif top == best:
            best_masks.append(masks[weight == top])
    winner = _least_tuple(np.concatenate(best_masks))
    return SolveResult(winner, best, 1 << g.n)


def mwds_exact(g: Graph, w: Sequence[int]) -> SolveResult:
    """Minimum-weight dominating set by branch and bound (n <= 24).

    Branches on the undominated vertex with the fewest remaining dominators,
    trying its allowed closed neighbors in ascending order and forbidding
    each one in later sibling branches. The lower bound charges every
    undominated vertex its cheapest per-vertex share ``w(v) / |new coverage|``.
    The first optimum met in this order is returned.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise CapacityError(f"dominating-set solver supports at most {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    w = _check_weights(g, w)
    closed = [row | 1 << v for v, row in enumerate(g.adj)]
    full = g.vertex_mask
    state = {"best": sum(w) + 1, "set": full, "nodes": 0}

    def search(dominated: int, chosen: int, forbidden: int, weight: int) -> None:
        state["nodes"] += 1
        if dominated == full:
            if weight < state["best"]:
                state["best"], state["set"] = weight, chosen
            return
        open_ = full & ~dominated
        allowed = full & ~forbidden & ~chosen
        bound = 0.0
        pick, fewest = -1, None
        for u in bits(open_):
            options = closed[u] & allowed
            if not options:
                return
            share = min(w[v] / (closed[v] & open_).bit_count() for v in bits(options))
            bound += share
            count = options.bit_count()
            if fewest is None or count < fewest:
                pick, fewest = u, count
        if weight + bound > state["best"] - 1 + 1e-9:
            return
        banned = forbidden
        for v in bits(closed[pick] & allowed):
            search(dominated | closed[v], chosen | 1 << v, banned, weight + w[v])
            banned |= 1 << v

    search(0, 0, 0, 0)
    return SolveResult(to_tuple(state["set"]), state["best"], state["nodes"])


def mwds_oracle(g: Graph, w: Sequence[int]) -> SolveResult:
    """Minimum-weight dominating set by scoring every subset; least tuple on ties."""
    if g.n > ORACLE_MAX_VERTICES:
        raise CapacityError(f"oracle supports at most {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    w = _check_weights(g, w)
    best, best_masks = None, []
    chunk = 1 << 18
    for start in range(0, 1 << g.n, chunk):
        masks, member, weight = _subset_table(g, w, start, min(start + chunk, 1 << g.n))
        ok = np.ones(len(masks), dtype=bool)
        for v in range(g.n):
            hit = member[v].copy()
            for u in bits(g.adj[v]):
                hit |= member[u]
            ok &= hit == 1
        if not ok.any():
            continue
        weight = np.where(ok, weight, np.iinfo(np.int64).max)
        low = int(weight.min())
        if best is None or low < best:
            best, best_masks = low, [masks[weight == low]]
        elif low == best:
            best_masks.append(masks[weight == low])
    winner = _least_tuple(np.concatenate(best_masks))
    return SolveResult(winner, best, 1 << g.n)
