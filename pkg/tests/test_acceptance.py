"""Exit criteria for the package, one test per criterion.

Every tolerance is exact (zero mismatches). Each test appends a one-line
PASS/FAIL record that ``conftest.pytest_terminal_summary`` prints at the end
of the run. The exhaustive n <= 7 checks take several minutes on one core.
"""

import random
import time

import pytest

from effdom.eds import check_lemma1, eds_brute_force, eds_via_square, verify_eds
from effdom.formats import emit_graph6, parse_graph6
from effdom.graph import (
    complete_graph,
    cycle_graph,
    distance_matrix,
    empty_graph,
    from_bitmask,
    from_edge_list,
    path_graph,
    square,
    to_bitmask,
)
from effdom.harness import (
    HOLDS,
    NOT_APPLICABLE,
    NOT_IN_CLASS,
    SampleSpec,
    SearchReport,
    evaluate,
    exhaustive_report,
    random_graph,
    sample_graphs,
    verify_theorem,
)
from effdom.mwis import mwis_exact, mwis_oracle
from effdom.patterns import _degree_masks, catalog, find_induced

from .oracles import contains_all_labeled, is_induced_map

RESULTS = []

BANNER = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


class Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title

    def __enter__(self):
        self.start = time.time()
        self.detail = ""
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        elapsed = time.time() - self.start
        RESULTS.append(f"criterion {self.number} [{status}] {self.title} ({elapsed:.1f}s) {self.detail}".rstrip())
        return False


def labeled_graphs(n_max):
    for n in range(n_max + 1):
        for code in range(1 << (n * (n - 1) // 2)):
            yield from_bitmask(n, code)


def seeded_random_graphs(count, n_max, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, n_max)
        p = rng.choice([0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9, rng.random()])
        yield random_graph(n, p, rng.getrandbits(64))


def lemma_corpus():
    yield from labeled_graphs(6)
    yield from seeded_random_graphs(2000, 20, seed=20240601)


@pytest.mark.slow
def test_criterion_1_lemma1_equivalence():
    with Criterion(1, "three-way EDS / MWDS / square-MWIS equivalence") as c:
        checked = inconsistent = 0
        for g in lemma_corpus():
            checked += 1
            if not check_lemma1(g).consistent:
                inconsistent += 1
        c.detail = f"graphs={checked} inconsistent={inconsistent}"
        assert checked == sum(1 << (n * (n - 1) // 2) for n in range(7)) + 2000
        assert inconsistent == 0


@pytest.mark.slow
def test_criterion_2_decider_agreement():
    with Criterion(2, "square reduction agrees with exact-cover decider") as c:
        checked = disagreements = bad_witness = exists = 0
        for g in lemma_corpus():
            checked += 1
            a, b = eds_via_square(g), eds_brute_force(g)
            if a.exists != b.exists:
                disagreements += 1
            for r in (a, b):
                if r.exists and not verify_eds(g, r.vertices):
                    bad_witness += 1
            exists += a.exists
        c.detail = f"graphs={checked} with_eds={exists} disagreements={disagreements} bad_witnesses={bad_witness}"
        assert disagreements == 0 and bad_witness == 0


@pytest.mark.slow
def test_criterion_3a_theorems_exhaustive():
    with Criterion("3a", "zero theorem violations, all labeled graphs n <= 7") as c:
        report = exhaustive_report(7)
        c.detail = (f"graphs={report.graphs} class_with_eds={report.holds['T1']} "
                    f"no_eds={report.no_eds} violations={report.total_violations}")
        assert report.graphs == sum(1 << (n * (n - 1) // 2) for n in range(1, 8))
        assert report.holds["T1"] > 0
        assert report.total_violations == 0


SAMPLING_GRID = [(n, p) for n in (10, 15, 20, 25, 30, 35, 40) for p in (0.03, 0.06, 0.1, 0.2, 0.35, 0.5, 0.7, 0.85, 0.95)]


@pytest.mark.slow
def test_criterion_3b_theorems_random_class_members():
    with Criterion("3b", "zero theorem violations, >= 10000 repaired random class members, 8 <= n <= 40") as c:
        report = SearchReport()
        sizes = []
        round_ = 0
        while report.graphs < 10_000:
            for i, (n, p) in enumerate(SAMPLING_GRID):
                spec = SampleSpec(n=n, p=p, seed=7_000_000 + 1000 * round_ + i, min_n=8)
                members = list(sample_graphs(spec, 200))
                sizes.extend(g.n for g in members)
                report = report.merge(evaluate(members))
            round_ += 1
        c.detail = (f"members={report.graphs} with_eds={report.holds['T1']} no_eds={report.no_eds} "
                    f"n_range={min(sizes)}..{max(sizes)} violations={report.total_violations}")
        assert report.not_in_class == 0
        assert report.graphs >= 10_000 and 8 <= min(sizes) and max(sizes) <= 40
        assert report.total_violations == 0


def test_criterion_4_square_correctness():
    with Criterion(4, "square matches distance-matrix definition") as c:
        checked = mismatches = 0
        corpus = list(labeled_graphs(6))
        rng = random.Random(404)
        for _ in range(1000):
            n = rng.randint(0, 40)
            corpus.append(random_graph(n, rng.choice([0.02, 0.05, 0.1, 0.2, 0.4, rng.random()]), rng.getrandbits(64)))
        for g in corpus:
            checked += 1
            d = distance_matrix(g)
            h = square(g)
            for u in range(g.n):
                for v in range(g.n):
                    if u != v and h.has_edge(u, v) != (d[u][v] in (1, 2)):
                        mismatches += 1
        c.detail = f"graphs={checked} mismatched_pairs={mismatches}"
        assert mismatches == 0


@pytest.mark.slow
def test_criterion_5_pattern_detector_completeness():
    with Criterion(5, "find_induced agrees with all-injective-maps oracle, all labeled graphs n <= 7") as c:
        patterns = catalog()
        checks = disagreements = invalid = witnesses = 0
        for n in range(8):
            oracle = {p.name: contains_all_labeled(n, p.graph) for p in patterns}
            for code in range(1 << (n * (n - 1) // 2)):
                g = from_bitmask(n, code)
                index = _degree_masks(g)
                for p in patterns:
                    emb = find_induced(g, p, index)
                    checks += 1
                    if (emb is not None) != bool(oracle[p.name][code]):
                        disagreements += 1
                    if emb is not None:
                        witnesses += 1
                        if len(set(emb)) != len(emb) or not is_induced_map(g, p.graph, emb):
                            invalid += 1
        c.detail = f"checks={checks} witnesses={witnesses} disagreements={disagreements} invalid_witnesses={invalid}"
        assert disagreements == 0 and invalid == 0


def test_criterion_6_mwis_optimality():
    with Criterion(6, "mwis_exact matches subset-enumeration oracle in weight") as c:
        rng = random.Random(606)
        checked = mismatches = 0
        for g in labeled_graphs(6):
            for w in ([row.bit_count() + 1 for row in g.adj], [rng.randint(0, 10) for _ in range(g.n)]):
                checked += 1
                if mwis_exact(g, w).weight != mwis_oracle(g, w).weight:
                    mismatches += 1
        for _ in range(2000):
            n = rng.randint(0, 16)
            g = random_graph(n, rng.choice([0.1, 0.2, 0.3, 0.5, 0.7, 0.9, rng.random()]), rng.getrandbits(64))
            w = [rng.randint(0, 10) for _ in range(n)]
            checked += 1
            if mwis_exact(g, w).weight != mwis_oracle(g, w).weight:
                mismatches += 1
        c.detail = f"instances={checked} mismatches={mismatches}"
        assert mismatches == 0


def test_criterion_7_golden_cases():
    with Criterion(7, "golden micro-cases") as c:
        p4, c4, k1, p5 = path_graph(4), cycle_graph(4), empty_graph(1), path_graph(5)
        for decide in (eds_via_square, eds_brute_force):
            assert decide(p4).exists and decide(p4).vertices == (0, 3)
            assert not decide(c4).exists
            assert decide(k1).exists and decide(k1).vertices == (0,)
        assert verify_theorem(p5, "T1").status == HOLDS
        assert verify_theorem(p5, "T2").status == HOLDS
        for which in ("T1", "T2"):
            v = verify_theorem(BANNER, which)
            assert v.status == NOT_APPLICABLE and v.reason == NOT_IN_CLASS
        c.detail = "P4 Exists({0,3}); C4 NotExists; K1 Exists({0}); P5 T1/T2 Holds; banner not-in-class"


def test_criterion_8_graph6_roundtrip():
    with Criterion(8, "graph6 bit-exact round trip and hand-decoded vectors") as c:
        assert parse_graph6("C~") == complete_graph(4)
        assert parse_graph6("Ch") == path_graph(4)
        assert parse_graph6("Cl") == cycle_graph(4)
        assert [emit_graph6(g) for g in (complete_graph(4), path_graph(4), cycle_graph(4))] == ["C~", "Ch", "Cl"]
        rng = random.Random(808)
        failures = 0
        for _ in range(1000):
            g = random_graph(rng.randint(0, 40), rng.random(), rng.getrandbits(64))
            text = emit_graph6(g)
            back = parse_graph6(text)
            if back != g or to_bitmask(back) != to_bitmask(g) or emit_graph6(back) != text:
                failures += 1
        c.detail = f"random_graphs=1000 failures={failures}"
        assert failures == 0
