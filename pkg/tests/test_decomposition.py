from __future__ import annotations

import pytest

from src.decomposition.extreme import extremize, is_extreme
from src.decomposition.model import (
    ClassicTreeDecomposition,
    LenientTreeDecomposition,
    classic_to_lenient,
    ltd_width,
    petal,
    trace,
    trivial_ltd,
    validate_classic,
    validate_ltd,
)
from src.errors import DomainError, PreconditionError, StructuralError
from src.graph.model import Graph


def ltd(graph: Graph, bags: list[set[int]], edges: list[tuple[int, int]]) -> LenientTreeDecomposition:
    return LenientTreeDecomposition.from_parts(graph, bags, edges)


def test_two_bags_decompose_k4() -> None:
    d = ltd(Graph.complete(4), [{0, 1}, {2, 3}], [(0, 1)])
    assert validate_ltd(d).ok
    assert ltd_width(d) == d.width == 2
    assert trace(d, 2) == frozenset({1})


@pytest.mark.parametrize(
    ("graph", "bags", "edges", "clause"),
    [
        (Graph.path(3), [{0, 1}], [], "C1"),
        (Graph.path(3), [{0}, {1}, {2}], [(0, 2), (2, 1)], "C2"),
        (Graph.path(3), [{0, 1}, {2}, {1}], [(0, 1), (1, 2)], "C3"),
        (Graph.path(3), [{0, 1}, {1, 2}, {2}], [], "tree"),
    ],
)
def test_validate_ltd_names_the_broken_condition(
    graph: Graph, bags: list[set[int]], edges: list[tuple[int, int]], clause: str
) -> None:
    verdict = validate_ltd(ltd(graph, bags, edges))
    assert not verdict.ok
    assert verdict.clause == clause


def test_bags_outside_the_graph_are_structural_errors() -> None:
    with pytest.raises(StructuralError):
        validate_ltd(ltd(Graph.path(3), [{0, 1, 7}], []))
    with pytest.raises(StructuralError):
        ltd(Graph.path(3), [{0, 1, 2}], [(0, 1)])


def test_classic_decompositions_need_each_edge_in_one_bag() -> None:
    k4 = Graph.complete(4)
    classic = ClassicTreeDecomposition.from_parts(k4, [{0, 1}, {2, 3}], [(0, 1)])
    assert validate_classic(classic).clause == "C2'"
    single = ClassicTreeDecomposition.from_parts(k4, [{0, 1, 2, 3}])
    assert validate_classic(single).ok
    assert single.classic_width == 3
    lenient = classic_to_lenient(single)
    assert validate_ltd(lenient).ok
    assert lenient.width == 4


def test_disconnected_traces_are_rejected() -> None:
    triangle = ltd(Graph.complete(3), [{0, 1}, {1, 2}, {0, 2}], [(0, 1), (1, 2)])
    verdict = validate_ltd(triangle)
    assert verdict.status == "invalid"
    assert (verdict.clause, verdict.witness) == ("C3", 0)
    classic = ClassicTreeDecomposition.from_parts(
        Graph.complete(3), [{0, 1}, {1, 2}, {0, 2}], [(0, 1), (1, 2)]
    )
    assert validate_classic(classic).clause == "C3"


def test_trivial_ltd() -> None:
    d = trivial_ltd(Graph.cycle(5))
    assert validate_ltd(d).ok
    assert d.width == 5


def test_petal() -> None:
    d = ltd(Graph.path(4), [{0, 1}, {1, 2}, {2, 3}], [(0, 1), (1, 2)])
    assert petal(d, 0) == frozenset({0})
    assert petal(d, 2) == frozenset({3})
    with pytest.raises(DomainError):
        petal(d, 1)
    with pytest.raises(DomainError):
        petal(trivial_ltd(Graph.path(2)), 0)


# -- extreme decompositions -------------------------------------------------


def test_k4_two_bags_are_extreme() -> None:
    assert is_extreme(ltd(Graph.complete(4), [{0, 1}, {2, 3}], [(0, 1)])).ok


@pytest.mark.parametrize(
    ("graph", "bags", "edges", "clause"),
    [
        (Graph.path(3), [{0, 1}, {1, 2}, {2}], [(0, 1), (1, 2)], "equal-size"),
        (Graph.path(2), [{0, 1}, {0, 1}], [(0, 1)], "subset"),
        (Graph.star(3), [{0, 1}, {0, 2}, {0, 3}], [(0, 1), (0, 2)], "leaf-siblings"),
    ],
)
def test_is_extreme_names_the_rule(
    graph: Graph, bags: list[set[int]], edges: list[tuple[int, int]], clause: str
) -> None:
    verdict = is_extreme(ltd(graph, bags, edges))
    assert not verdict.ok
    assert verdict.clause == clause


def test_extremize_pads_then_drops_the_nested_bag() -> None:
    d = ltd(Graph.path(3), [{0, 1}, {1, 2}, {2}], [(0, 1), (1, 2)])
    out = extremize(d)
    assert out.bags == (frozenset({0, 1}), frozenset({1, 2}))
    assert out.tree.sorted_edges == ((0, 1),)
    assert is_extreme(out).ok


def test_extremize_merges_thin_leaf_siblings() -> None:
    d = ltd(Graph.star(3), [{0, 1}, {0, 2}, {0, 3}], [(0, 1), (0, 2)])
    out = extremize(d)
    assert out.bags == (frozenset({0, 1}), frozenset({2, 3}))
    assert validate_ltd(out).ok


def test_extremize_can_widen() -> None:
    d = ltd(Graph.path(4), [{0, 1}, {1, 2}, {2, 3}], [(0, 1), (1, 2)])
    out = extremize(d, width=3)
    assert out.width == 3
    assert is_extreme(out).ok


def test_extremize_rejects_bad_input() -> None:
    d = ltd(Graph.path(3), [{0, 1}, {1, 2}], [(0, 1)])
    with pytest.raises(PreconditionError):
        extremize(d, width=1)
    broken = ltd(Graph.path(3), [{0, 1}], [])
    with pytest.raises(PreconditionError):
        extremize(broken)


def test_extremize_cannot_pad_past_the_vertex_count() -> None:
    single = trivial_ltd(Graph.path(2))
    assert extremize(single, width=2).width == 2
    with pytest.raises(PreconditionError):
        extremize(single, width=3)
    with pytest.raises(PreconditionError):
        extremize(ltd(Graph.path(4), [{0, 1}, {1, 2}, {2, 3}], [(0, 1), (1, 2)]), width=5)
