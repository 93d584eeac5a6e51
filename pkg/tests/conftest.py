import itertools

import pytest

from induced_subtrees import from_edges


def complete(n):
    return from_edges(n, itertools.combinations(range(n), 2))


def path(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def all_graphs(max_n):
    """Every labelled simple graph on 0..max_n vertices."""
    for n in range(max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            yield from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


@pytest.fixture
def H():
    """K4 without the edge 0-3."""
    return from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


NAMED = {
    "P3": lambda: path(3),
    "triangle": lambda: cycle(3),
    "H": lambda: from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "C5": lambda: cycle(5),
    "K4": lambda: complete(4),
    "star": lambda: from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    "single": lambda: from_edges(1, []),
    "empty": lambda: from_edges(0, []),
    "edgeless4": lambda: from_edges(4, []),
}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
