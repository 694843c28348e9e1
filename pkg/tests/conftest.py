from fractions import Fraction

import pytest

from distinertia.graph import WeightedGraph

ACCEPTANCE_RESULTS = {}


def graph(n, *edges):
    return WeightedGraph.from_edges(n, [(u, v, Fraction(w)) for u, v, w in edges])


@pytest.fixture
def unit_triangle():
    return graph(3, (1, 2, 1), (2, 3, 1), (1, 3, 1))


@pytest.fixture
def unit_c4():
    return graph(4, (1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 1))


@pytest.fixture
def path3():
    return graph(3, (1, 2, 1), (2, 3, 1))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key:>2}: {detail}")
