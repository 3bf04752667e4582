import pytest

from effdom.eds import check_lemma1, eds_brute_force, eds_via_square, solve_eds, verify_eds, _exact_covers
from effdom.graph import (
    CapacityError,
    complete_graph,
    cycle_graph,
    domination_weights,
    empty_graph,
    from_bitmask,
    path_graph,
    square,
    to_tuple,
)
from effdom.mwis import mwis_oracle

from .conftest import random_instances
from .oracles import all_eds_naive, is_eds_naive


class TestVerify:
    def test_k1(self, k1):
        assert verify_eds(k1, {0})

    def test_p4(self, p4):
        assert is_eds_naive(p4, {0, 3})
        assert verify_eds(p4, {0, 3})

    def test_c4_double_cover(self, c4):
        assert not is_eds_naive(c4, {0, 2})
        assert not verify_eds(c4, {0, 2})

    def test_dependent_set_rejected(self, p4):
        assert not verify_eds(p4, {0, 1, 3})

    def test_out_of_range(self, p4):
        assert not verify_eds(p4, {0, 7})

    def test_matches_naive_exhaustively(self):
        for n in range(5):
            for code in range(1 << (n * (n - 1) // 2)):
                g = from_bitmask(n, code)
                for mask in range(1 << n):
                    assert verify_eds(g, mask) == is_eds_naive(g, to_tuple(mask))


class TestBruteForce:
    def test_p4_unique(self, p4):
        assert all_eds_naive(p4) == [(0, 3)]
        r = eds_brute_force(p4)
        assert r.exists and r.vertices == (0, 3)

    def test_c4(self, c4):
        assert all_eds_naive(c4) == []
        assert not eds_brute_force(c4).exists

    def test_k1(self, k1):
        assert eds_brute_force(k1).vertices == (0,)

    def test_empty_graph(self):
        r = eds_brute_force(empty_graph(0))
        assert r.exists and r.vertices == ()

    def test_least_witness_and_all_solutions(self):
        for g, _ in random_instances(seed=21, count=150, n_max=10):
            naive = all_eds_naive(g)
            covers = sorted(to_tuple(m) for m in _exact_covers(g))
            assert covers == sorted(naive)
            r = eds_brute_force(g)
            assert r.exists == bool(naive)
            if naive:
                assert r.vertices == min(naive)
                assert all(verify_eds(g, d) for d in covers)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            eds_brute_force(empty_graph(25))


class TestViaSquare:
    def test_p4_pipeline(self, p4):
        w = domination_weights(p4)
        assert w == [2, 3, 3, 2]
        oracle = mwis_oracle(square(p4), w)
        assert oracle.weight == 4 and oracle.vertices == (0, 3)
        r = eds_via_square(p4)
        assert r.exists and r.vertices == (0, 3)

    def test_c4_pipeline(self, c4):
        assert square(c4) == complete_graph(4)
        assert mwis_oracle(square(c4), domination_weights(c4)).weight == 3
        assert not eds_via_square(c4).exists

    def test_k1(self, k1):
        assert eds_via_square(k1).vertices == (0,)

    def test_empty_graph(self):
        assert eds_via_square(empty_graph(0)).vertices == ()

    def test_larger_than_brute_force_cap(self):
        g = path_graph(40)
        r = eds_via_square(g)
        assert r.exists and verify_eds(g, r.vertices)
        assert not eds_via_square(cycle_graph(40)).exists
        assert eds_via_square(cycle_graph(39)).exists

    def test_agreement_on_random_graphs(self):
        for g, _ in random_instances(seed=22, count=300, n_max=16):
            a, b = eds_via_square(g), eds_brute_force(g)
            assert a.exists == b.exists
            if a.exists:
                assert verify_eds(g, a.vertices) and verify_eds(g, b.vertices)
                assert sum(domination_weights(g)[v] for v in a.vertices) == g.n

    def test_solve_eds_dispatch(self, p4):
        assert solve_eds(p4, "brute").method == "brute"
        assert solve_eds(p4).method == "square"
        with pytest.raises(ValueError):
            solve_eds(p4, "magic")


class TestLemma1:
    def test_p4(self, p4):
        r = check_lemma1(p4)
        assert (r.eds_exists, r.mwds_attains_n, r.mwis_attains_n) == (True, True, True)
        assert r.consistent

    def test_c4(self, c4):
        r = check_lemma1(c4)
        assert (r.eds_exists, r.mwds_attains_n, r.mwis_attains_n) == (False, False, False)
        assert r.mwds_weight == 6 and r.consistent

    def test_k2(self):
        r = check_lemma1(path_graph(2))
        assert (r.eds_exists, r.mwds_attains_n, r.mwis_attains_n) == (True, True, True)

    def test_bounds(self):
        # every dominating set weighs >= n and every square-independent set <= n
        for g, _ in random_instances(seed=23, count=200, n_max=14):
            r = check_lemma1(g)
            assert r.mwds_weight >= g.n >= r.mwis_square_weight
            assert r.consistent

    def test_capacity(self):
        with pytest.raises(CapacityError):
            check_lemma1(empty_graph(25))
