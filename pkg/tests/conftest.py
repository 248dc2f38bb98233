from __future__ import annotations

import pytest

from src.graph.canonical import enumerate_graphs
from src.graph.model import Graph
from src.graph.primitives import mask_is_connected
from src.obstructions.builtins import obstruction_graphs


def connected_graphs(max_order: int) -> list[Graph]:
    out = []
    for n in range(1, max_order + 1):
        out.extend(g for g in enumerate_graphs(n) if mask_is_connected(g, g.full_mask))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    """Every connected graph on at most six vertices, one per isomorphism class."""
    return connected_graphs(6)


@pytest.fixture(scope="session")
def named() -> dict[str, Graph]:
    return obstruction_graphs()


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """Every connected graph on at most five vertices."""
    return connected_graphs(5)
