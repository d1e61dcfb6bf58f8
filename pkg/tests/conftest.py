from __future__ import annotations

import itertools

import pytest

from trilength.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def complete(n: int) -> Graph:
    return Graph.from_edges(itertools.combinations(range(n), 2), n)


def cycle(n: int) -> Graph:
    return Graph.from_edges(((i, (i + 1) % n) for i in range(n)), n)


def k23() -> Graph:
    return Graph.from_edges([(a, b) for a in (0, 1) for b in (2, 3, 4)], 5)


def fan(n: int) -> Graph:
    """Cycle 0..n-1 plus all chords from vertex 0."""
    return cycle(n).with_edges((0, i) for i in range(2, n - 1))


@pytest.fixture
def triangle() -> Graph:
    return cycle(3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
