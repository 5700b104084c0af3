import random

import pytest

from brookscolor.core import FiniteGraph


def cycle_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture
def petersen() -> FiniteGraph:
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return FiniteGraph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def prism() -> FiniteGraph:
    # two triangles joined by a perfect matching
    return FiniteGraph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
            (0, 3), (1, 4), (2, 5)])


@pytest.fixture
def cube() -> FiniteGraph:
    edges = []
    for v in range(8):
        for bit in range(3):
            u = v ^ (1 << bit)
            if u > v:
                edges.append((v, u))
    return FiniteGraph.from_edges(8, edges)


@pytest.fixture
def k33() -> FiniteGraph:
    return FiniteGraph.from_edges(
        6, [(i, j) for i in range(3) for j in range(3, 6)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
