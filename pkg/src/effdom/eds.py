"""Efficient dominating sets: certificate check, two deciders, and the
three-way equivalence check between EDS existence, minimum-weight domination
and maximum-weight independence in the square.

With ``w(v) = deg(v) + 1``, a set ``D`` is efficient dominating exactly when
its closed neighborhoods partition ``V``, so its weight is ``n``. Any
dominating set weighs at least ``n`` and any independent set of the square
at most ``n``; both bounds are attained precisely by efficient dominating
sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import CapacityError, Graph, bits, domination_weights, square, to_tuple, _as_mask
from .mwis import ORACLE_MAX_VERTICES, mwds_exact, mwis_exact

BRUTE_MAX_VERTICES = ORACLE_MAX_VERTICES


@dataclass(frozen=True)
class EdsResult:
    exists: bool
    vertices: Optional[tuple[int, ...]]
    method: str

    def __str__(self):
        if self.exists:
            return f"Exists({{{', '.join(map(str, self.vertices))}}})"
        return "NotExists"


def verify_eds(g: Graph, d) -> bool:
    """True iff ``d`` is independent and every other vertex has exactly one neighbor in it."""
    mask = _as_mask(d)
    if mask & ~g.vertex_mask:
        return False
    for v in range(g.n):
        inside = (g.adj[v] & mask).bit_count()
        if mask >> v & 1:
            if inside:
                return False
        elif inside != 1:
            return False
    return True


def _exact_covers(g: Graph) -> Iterator[int]:
    """Yield every vertex set whose closed neighborhoods partition ``V``."""
    closed = [row | 1 << v for v, row in enumerate(g.adj)]

    def cover(uncovered: int, chosen: int) -> Iterator[int]:
        if not uncovered:
            yield chosen
            return
        best_opts = None
        for u in bits(uncovered):
            opts = [v for v in bits(closed[u]) if closed[v] & uncovered == closed[v]]
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if not opts:
                    return
        for v in best_opts:
            yield from cover(uncovered & ~closed[v], chosen | 1 << v)

    yield from cover(g.vertex_mask, 0)


def eds_brute_force(g: Graph) -> EdsResult:
    """Decide EDS existence by exact cover; return the lexicographically least EDS."""
    if g.n > BRUTE_MAX_VERTICES:
        raise CapacityError(f"brute-force EDS supports at most {BRUTE_MAX_VERTICES} vertices, got {g.n}")
    found = [to_tuple(m) for m in _exact_covers(g)]
    if not found:
        return EdsResult(False, None, "brute")
    return EdsResult(True, min(found), "brute")


def eds_via_square(g: Graph) -> EdsResult:
    """Decide EDS existence through a maximum-weight independent set of the square."""
    w = domination_weights(g)
    r = mwis_exact(square(g), w)
    if r.weight != g.n:
        return EdsResult(False, None, "square")
    if not verify_eds(g, r.vertices):
        raise RuntimeError(f"square reduction produced a non-EDS {r.vertices} for {g!r}")
    return EdsResult(True, r.vertices, "square")


@dataclass(frozen=True)
class Lemma1Report:
    eds_exists: bool
    mwds_weight: int
    mwis_square_weight: int
    n: int

    @property
    def mwds_attains_n(self) -> bool:
        return self.mwds_weight == self.n

    @property
    def mwis_attains_n(self) -> bool:
        return self.mwis_square_weight == self.n

    @property
    def consistent(self) -> bool:
        return self.eds_exists == self.mwds_attains_n == self.mwis_attains_n


def check_lemma1(g: Graph) -> Lemma1Report:
    """Compute all three characterizations of EDS existence with independent solvers."""
    if g.n > ORACLE_MAX_VERTICES:
        raise CapacityError(f"equivalence check supports at most {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    w = domination_weights(g)
    return Lemma1Report(
        eds_exists=eds_brute_force(g).exists,
        mwds_weight=mwds_exact(g, w).weight,
        mwis_square_weight=mwis_exact(square(g), w).weight,
        n=g.n,
    )


def solve_eds(g: Graph, method: str = "square") -> EdsResult:
    if method == "square":
        return eds_via_square(g)
    if method == "brute":
        return eds_brute_force(g)
    raise ValueError(f"unknown EDS method {method!r}; use 'square' or 'brute'")


__all__ = [
    "EdsResult",
    "Lemma1Report",
    "verify_eds",
    "eds_brute_force",
    "eds_via_square",
    "check_lemma1",
    "solve_eds",
]
