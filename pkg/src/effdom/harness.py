"""Graph corpora and machine checks of the square-graph structure theorems.

For a (P6, banner)-free graph ``G`` that has an efficient dominating set:

* ``T1``: the square of ``G`` is P6-free;
* ``T2``: the square of ``G`` is banner-free.

``verify_theorem`` evaluates one claim on one graph. Corpora come from
exhaustive enumeration of labeled graphs or from seeded random graphs that
are repaired into the class by deleting vertices of forbidden embeddings.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .eds import eds_via_square
from .formats import emit_graph6
from .graph import (
    CapacityError,
    Graph,
    delete_vertex,
    from_bitmask,
    pair_index,
    square,
    to_bitmask,
)
from .patterns import (
    PAPER_CLASS,
    Embedding,
    Pattern,
    _degree_masks,
    contains_table,
    find_induced,
    get_pattern,
    is_f_free,
    resolve_patterns,
)

ENUMERATION_MAX_VERTICES = 8
THEOREM_PATTERN = {"T1": "P6", "T2": "banner"}

HOLDS = "holds"
NOT_APPLICABLE = "not-applicable"
VIOLATION = "violation"
NOT_IN_CLASS = "not-in-class"
NO_EDS = "no-EDS"


# -- random graphs and class repair ---------------------------------------


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) from ``random.Random(seed)``.

    Pairs are visited in column-major upper-triangle order (0,1), (0,2),
    (1,2), (0,3), ...; pair ``{i, j}`` becomes an edge when the next
    ``random()`` draw is below ``p``. One draw is consumed per pair.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n > 64:
        raise CapacityError(f"graph has {n} vertices; at most 64 are supported")
    rng = random.Random(seed)
    code = 0
    for k in range(n * (n - 1) // 2):
        if rng.random() < p:
            code |= 1 << k
    return from_bitmask(n, code)


def make_f_free(g: Graph, ps: Iterable[Pattern | str], seed: int) -> Graph:
    """Delete vertices until ``g`` has no induced copy of any pattern in ``ps``.

    Each round finds a forbidden embedding and removes one of its host
    vertices, chosen by ``random.Random(seed)``.
    """
    ps = resolve_patterns(ps)
    rng = random.Random(seed)
    while True:
        free, witness = is_f_free(g, ps)
        if free:
            return g
        _, emb = witness
        g = delete_vertex(g, rng.choice(sorted(emb)))


# -- exhaustive enumeration -----------------------------------------------


@lru_cache(maxsize=None)
def _relabel_table(n: int) -> np.ndarray:
    # row per permutation: (1 << new position) for each upper-triangle bit
    perms = list(itertools.permutations(range(n)))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for r, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            table[r, k] = 1 << pair_index(perm[i], perm[j])
    return table


def canonical_code(g: Graph) -> int:
    """Minimum upper-triangle bitmask over all ``n!`` relabelings of ``g``."""
    if g.n > ENUMERATION_MAX_VERTICES:
        raise CapacityError(f"canonical form supports at most {ENUMERATION_MAX_VERTICES} vertices")
    if g.n < 2:
        return 0
    code = to_bitmask(g)
    present = [k for k in range(g.n * (g.n - 1) // 2) if code >> k & 1]
    if not present:
        return 0
    return int(_relabel_table(g.n)[:, present].sum(axis=1).min())


@lru_cache(maxsize=None)
def _canonical_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all isomorphism classes on ``n`` vertices, ascending.

    Built by adding a vertex of minimum degree to every class on ``n - 1``
    vertices; every graph arises this way by deleting a minimum-degree vertex.
    """
    if n <= 1:
        return (0,)
    found = set()
    for code in _canonical_codes(n - 1):
        base = from_bitmask(n - 1, code)
        degs = base.degrees()
        for nbrs in range(1 << (n - 1)):
            d = nbrs.bit_count()
            if any(degs[u] + (nbrs >> u & 1) < d for u in range(n - 1)):
                continue
            adj = list(base.adj) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    adj[u] |= 1 << (n - 1)
            found.add(canonical_code(Graph(n, tuple(adj))))
    return tuple(sorted(found))


def enumerate_graphs(n: int, unique: bool = False) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices in ascending bitmask order.

    With ``unique=True`` only the canonical representative of each
    isomorphism class is produced (still ascending).
    """
    if not 0 <= n <= ENUMERATION_MAX_VERTICES:
        raise CapacityError(f"enumeration supports 0..{ENUMERATION_MAX_VERTICES} vertices, got {n}")
    if unique:
        for code in _canonical_codes(n):
            yield from_bitmask(n, code)
        return
    for code in range(1 << (n * (n - 1) // 2)):
        yield from_bitmask(n, code)


# -- theorem verdicts -----------------------------------------------------


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    status: str
    reason: Optional[str] = None
    witness: Optional[Embedding] = None

    def __str__(self):
        if self.status == HOLDS:
            return f"{self.theorem}: Holds"
        if self.status == NOT_APPLICABLE:
            return f"{self.theorem}: NotApplicable({self.reason})"
        return f"{self.theorem}: Violation({list(self.witness)})"


def _check_which(which: str) -> str:
    if which not in THEOREM_PATTERN:
        raise ValueError(f"unknown theorem {which!r}; use 'T1' or 'T2'")
    return which


def verify_theorem(g: Graph, which: str) -> TheoremVerdict:
    return verify_theorems(g, (which,))[0]


def verify_theorems(g: Graph, which: Sequence[str] = ("T1", "T2")) -> list[TheoremVerdict]:
    """Evaluate several claims on ``g`` sharing the class and EDS checks."""
    which = [_check_which(t) for t in which]
    in_class, _ = is_f_free(g, PAPER_CLASS)
    if not in_class:
        return [TheoremVerdict(t, NOT_APPLICABLE, NOT_IN_CLASS) for t in which]
    if not eds_via_square(g).exists:
        return [TheoremVerdict(t, NOT_APPLICABLE, NO_EDS) for t in which]
    h = square(g)
    index = _degree_masks(h)
    out = []
    for t in which:
        emb = find_induced(h, THEOREM_PATTERN[t], index)
        out.append(TheoremVerdict(t, HOLDS) if emb is None else TheoremVerdict(t, VIOLATION, witness=emb))
    return out


# -- reports --------------------------------------------------------------


@dataclass(frozen=True)
class SampleSpec:
    n: int
    p: float
    seed: int
    filter: tuple[str, ...] = PAPER_CLASS
    require_eds: bool = False
    min_n: int = 0

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability must lie in [0, 1], got {self.p}")
        object.__setattr__(self, "filter", tuple(self.filter))
        resolve_patterns(self.filter)

    @classmethod
    def parse(cls, text: str) -> "SampleSpec":
        """Parse ``n=20,p=0.3,seed=7[,forbid=P6+banner][,require_eds=1][,min_n=8]``."""
        fields = {}
        for part in text.split(","):
            if not part.strip():
                continue
            if "=" not in part:
                raise ValueError(f"spec item {part!r} is not key=value")
            key, value = (s.strip() for s in part.split("=", 1))
            fields[key] = value
        unknown = set(fields) - {"n", "p", "seed", "forbid", "filter", "require_eds", "min_n"}
        if unknown:
            raise ValueError(f"unknown spec keys: {', '.join(sorted(unknown))}")
        for key in ("n", "p", "seed"):
            if key not in fields:
                raise ValueError(f"spec is missing {key}=")
        forbid = fields.get("forbid", fields.get("filter"))
        return cls(
            n=int(fields["n"]),
            p=float(fields["p"]),
            seed=int(fields["seed"]),
            filter=tuple(forbid.replace("+", " ").split()) if forbid else PAPER_CLASS,
            require_eds=fields.get("require_eds", "0").lower() in ("1", "true", "yes"),
            min_n=int(fields.get("min_n", 0)),
        )


def sample_graphs(spec: SampleSpec, attempts: int) -> Iterator[Graph]:
    """Seeded class samples: one random graph per attempt, repaired into the class.

    Repaired graphs with fewer than ``spec.min_n`` vertices, or without an
    EDS when ``spec.require_eds`` is set, are dropped, so at most
    ``attempts`` graphs are produced.
    """
    master = random.Random(spec.seed)
    for _ in range(attempts):
        graph_seed = master.getrandbits(64)
        repair_seed = master.getrandbits(64)
        g = make_f_free(random_graph(spec.n, spec.p, graph_seed), spec.filter, repair_seed)
        if g.n < spec.min_n:
            continue
        if spec.require_eds and not eds_via_square(g).exists:
            continue
        yield g


@dataclass
class SearchReport:
    graphs: int = 0
    not_in_class: int = 0
    no_eds: int = 0
    holds: dict[str, int] = field(default_factory=lambda: {"T1": 0, "T2": 0})
    violations: dict[str, int] = field(default_factory=lambda: {"T1": 0, "T2": 0})
    no_eds_square_has: dict[str, int] = field(default_factory=lambda: {"P6": 0, "banner": 0})
    first_violation: Optional[tuple] = None
    """(theorem, n, bitmask, embedding) of the least violation seen."""

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    def record(self, g: Graph, verdicts: Sequence[TheoremVerdict]) -> list[TheoremVerdict]:
        """Tally the verdicts for ``g``; return the violations among them."""
        self.graphs += 1
        reason = verdicts[0].reason
        if reason == NOT_IN_CLASS:
            self.not_in_class += 1
            return []
        if reason == NO_EDS:
            self.no_eds += 1
            h = square(g)
            index = _degree_masks(h)
            for name in self.no_eds_square_has:
                if find_induced(h, name, index) is not None:
                    self.no_eds_square_has[name] += 1
            return []
        bad = []
        for v in verdicts:
            if v.status == HOLDS:
                self.holds[v.theorem] += 1
            else:
                self.violations[v.theorem] += 1
                key = (v.theorem, g.n, to_bitmask(g), tuple(v.witness))
                if self.first_violation is None or key < self.first_violation:
                    self.first_violation = key
                bad.append(v)
        return bad

    def merge(self, other: "SearchReport") -> "SearchReport":
        out = SearchReport(
            graphs=self.graphs + other.graphs,
            not_in_class=self.not_in_class + other.not_in_class,
            no_eds=self.no_eds + other.no_eds,
            holds={k: self.holds[k] + other.holds[k] for k in self.holds},
            violations={k: self.violations[k] + other.violations[k] for k in self.violations},
            no_eds_square_has={k: self.no_eds_square_has[k] + other.no_eds_square_has[k] for k in self.no_eds_square_has},
        )
        firsts = [f for f in (self.first_violation, other.first_violation) if f is not None]
        out.first_violation = min(firsts) if firsts else None
        return out

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.first_violation is not None:
            theorem, n, code, emb = self.first_violation
            d["first_violation"] = {
                "theorem": theorem,
                "graph6": emit_graph6(from_bitmask(n, code)),
                "embedding": list(emb),
            }
        d["total_violations"] = self.total_violations
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def lines(self) -> list[str]:
        out = [
            f"graphs={self.graphs}",
            f"not_in_class={self.not_in_class}",
            f"no_eds={self.no_eds}",
        ]
        for t in ("T1", "T2"):
            out.append(f"{t}_holds={self.holds[t]}")
            out.append(f"{t}_violations={self.violations[t]}")
        for name, count in self.no_eds_square_has.items():
            out.append(f"no_eds_square_has_{name}={count}")
        if self.first_violation is None:
            out.append("first_violation=none")
        else:
            fv = self.to_dict()["first_violation"]
            out.append(f"first_violation={fv['theorem']} {fv['graph6']} {','.join(map(str, fv['embedding']))}")
        status = "PASS" if self.total_violations == 0 else "FAIL"
        out.append(f"SUMMARY status={status} graphs={self.graphs} violations={self.total_violations}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines()) + "\n"


def evaluate(graphs: Iterable[Graph], on_violation=None) -> SearchReport:
    report = SearchReport()
    for g in graphs:
        bad = report.record(g, verify_theorems(g))
        if bad and on_violation is not None:
            for v in bad:
                on_violation(g, v)
    return report


def search_counterexamples(spec: SampleSpec, budget: int, on_violation=None) -> SearchReport:
    """Sample ``budget`` repaired graphs from ``spec`` and tally theorem verdicts."""
    return evaluate(sample_graphs(spec, budget), on_violation)


def class_codes(n: int, patterns: Sequence[str] = PAPER_CLASS) -> np.ndarray:
    """Bitmask codes of the labeled ``n``-vertex graphs free of all ``patterns``."""
    m = n * (n - 1) // 2
    bad = np.zeros(1 << m, dtype=bool)
    for name in patterns:
        bad |= contains_table(n, get_pattern(name))
    return np.flatnonzero(~bad)


def _exhaustive_chunk(args) -> SearchReport:
    n, codes = args
    return evaluate(from_bitmask(n, int(c)) for c in codes)


def exhaustive_report(n_max: int, jobs: int = 1, on_violation=None) -> SearchReport:
    """Verdicts for every labeled graph with ``1 <= n <= n_max``.

    Graphs outside the class are counted in bulk by a vectorized pre-filter;
    only class members go through ``verify_theorems``.
    """
    if n_max > 7:
        raise CapacityError("exhaustive labeled verification is capped at n = 7")
    report = SearchReport()
    for n in range(1, n_max + 1):
        members = class_codes(n)
        total = 1 << (n * (n - 1) // 2)
        skipped = SearchReport(graphs=total - len(members), not_in_class=total - len(members))
        report = report.merge(skipped)
        if jobs > 1 and on_violation is None:
            chunks = [(n, part) for part in np.array_split(members, jobs * 8) if len(part)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_exhaustive_chunk, chunks):
                    report = report.merge(part)
        else:
            report = report.merge(evaluate((from_bitmask(n, int(c)) for c in members), on_violation))
    return report
