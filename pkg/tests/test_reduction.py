from __future__ import annotations

import pytest

from src.decomposition.model import validate_classic, validate_ltd
from src.decomposition.search import decide_width_le_k
from src.errors import DomainError, GuardExceeded, PreconditionError
from src.graph.io import from_graph6
from src.graph.model import Graph
from src.obstructions.builtins import H1_GRAPH6
from src.reduction.gadget import (
    adjacency_bag_lemma_check,
    forward_gadget_decomposition,
    gadget,
    verify_reduction,
)
from src.reduction.treewidth import treewidth_exact


@pytest.mark.parametrize(
    ("graph", "expected"),
    [
        (Graph.complete(4), 3),
        (Graph.cycle(4), 2),
        (Graph.path(5), 1),
        (Graph.star(4), 1),
        (Graph.edgeless(3), 0),
        (Graph.wheel(4), 3),
        (from_graph6(H1_GRAPH6), 2),
        (Graph(0), -1),
    ],
)
def test_treewidth_exact(graph: Graph, expected: int) -> None:
    value, witness = treewidth_exact(graph)
    assert value == expected
    assert validate_classic(witness).ok
    if graph.order:
        assert witness.classic_width == expected


def test_treewidth_guard() -> None:
    with pytest.raises(GuardExceeded):
        treewidth_exact(Graph.path(6), guard=5)


def test_gadget_sizes() -> None:
    triangle = gadget(Graph.complete(3), 2)
    assert (triangle.output.order, triangle.output.size) == (12, 18)
    assert triangle.paths_per_edge == 3
    k4 = gadget(Graph.complete(4), 2)
    assert (k4.output.order, k4.output.size) == (22, 36)


def test_gadget_provenance() -> None:
    gadget_map = gadget(Graph.path(3), 2)
    assert [p.original for p in gadget_map.provenance[:3]] == [0, 1, 2]
    mids = gadget_map.midpoints()
    assert len(mids) == 6
    w, first = mids[0]
    assert w == 3 and first.edge == (0, 1) and first.copy == 1
    assert gadget_map.output.neighbors(w) == frozenset({0, 1})
    assert gadget_map.output.neighbors(0) == frozenset({3, 4, 5})


def test_gadget_rejects_k_below_one() -> None:
    with pytest.raises(DomainError):
        gadget(Graph.complete(3), 0)


def test_forward_decomposition() -> None:
    triangle = Graph.complete(3)
    _, classic = treewidth_exact(triangle)
    lifted = forward_gadget_decomposition(gadget(triangle, 3), classic)
    assert validate_ltd(lifted).ok
    assert lifted.width <= 3
    assert len(lifted.bags) == len(classic.bags) + 3 * 5


def test_forward_decomposition_needs_small_treewidth() -> None:
    triangle = Graph.complete(3)
    _, classic = treewidth_exact(triangle)
    with pytest.raises(PreconditionError):
        forward_gadget_decomposition(gadget(triangle, 2), classic)


def test_adjacency_bag_lemma() -> None:
    gadget_map = gadget(Graph.path(3), 2)
    found = decide_width_le_k(gadget_map.output, 2)
    assert found is not None
    assert adjacency_bag_lemma_check(gadget_map, found)


def test_adjacency_bag_lemma_rejects_foreign_decomposition() -> None:
    gadget_map = gadget(Graph.path(3), 2)
    found = decide_width_le_k(Graph.path(3), 2)
    assert found is not None
    with pytest.raises(PreconditionError):
        adjacency_bag_lemma_check(gadget_map, found)


def test_verify_reduction_needs_k_two() -> None:
    with pytest.raises(DomainError):
        verify_reduction(Graph.path(3), 1)


@pytest.mark.slow
@pytest.mark.parametrize("graph", [Graph.complete(3), Graph.path(3), Graph.star(3), Graph.cycle(4)])
def test_verify_reduction(graph: Graph) -> None:
    assert verify_reduction(graph, 2)


@pytest.mark.slow
def test_verify_reduction_refutes_k4_minus_an_edge() -> None:
    graph = Graph.complete(4).delete_edge(0, 1)
    assert treewidth_exact(graph)[0] == 2
    assert verify_reduction(graph, 2)


@pytest.mark.parametrize("k", [2, 3])
def test_forward_decomposition_on_small_graphs(small_corpus: list[Graph], k: int) -> None:
    lifted_any = False
    for graph in small_corpus:
        tw, classic = treewidth_exact(graph)
        if tw > k - 1:
            continue
        gadget_map = gadget(graph, k)
        lifted = forward_gadget_decomposition(gadget_map, classic)
        assert lifted.base == gadget_map.output
        assert validate_ltd(lifted).ok, graph
        assert lifted.width <= k, graph
        assert adjacency_bag_lemma_check(gadget_map, lifted), graph
        lifted_any = True
    assert lifted_any
