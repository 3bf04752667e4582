import random

import pytest

from effdom.graph import complete_graph, cycle_graph, empty_graph, from_edge_list, path_graph


@pytest.fixture
def k1():
    return empty_graph(1)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def banner():
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def random_edges(rng: random.Random, n: int, p: float):
    return [(a, b) for b in range(n) for a in range(b) if rng.random() < p]


def random_instances(seed, count, n_max, n_min=0):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.choice([0.1, 0.2, 0.3, 0.5, 0.7, 0.9, rng.random()])
        yield from_edge_list(n, random_edges(rng, n, p)), rng


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
