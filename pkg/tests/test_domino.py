from __future__ import annotations

import pytest

from src.domino.extremal import domino_completion, is_edge_maximal
from src.domino.generators import edge_gap_bound, fan_edge_count, gen_chain, gen_fan, max_edge_bound
from src.domino.recognizer import PROPERTY_IDS, recognize_domino, refine_separator
from src.errors import DomainError, PreconditionError
from src.graph.model import Graph
from src.graph.primitives import augmented_component_sets, connectivity_degree, maximal_cliques, minimal_separators


# -- generators and formulas ------------------------------------------------


def test_extremal_pair_on_eight_vertices() -> None:
    assert gen_chain(8, 2).size == max_edge_bound(8, 2) == 16
    assert gen_fan(8, 2).size == fan_edge_count(8, 2) == 15
    assert edge_gap_bound(8, 2) == 1


def test_small_chains_are_cliques() -> None:
    assert gen_chain(4, 2) == Graph.complete(4)
    assert gen_chain(3, 2) == Graph.complete(3)


@pytest.mark.parametrize("k", [2, 3])
def test_chain_meets_the_edge_bound(k: int) -> None:
    for n in range(k, 25):
        assert gen_chain(n, k).size == max_edge_bound(n, k), n


@pytest.mark.parametrize("k", [2, 3])
def test_fan_meets_its_edge_count(k: int) -> None:
    for n in range(3 * k, 25):
        fan, chain = gen_fan(n, k), gen_chain(n, k)
        assert fan.size == fan_edge_count(n, k), n
        assert chain.size - fan.size == edge_gap_bound(n, k), n


def test_fan_shape() -> None:
    cliques = maximal_cliques(gen_fan(10, 3))
    hub = frozenset({3, 4})
    assert all(hub <= c for c in cliques)
    sizes = sorted(len(c) for c in cliques)
    assert sizes[0] == 4 and sizes[-1] == 6
    assert sizes.count(6) == 2


@pytest.mark.parametrize(
    "call",
    [
        lambda: gen_chain(1, 2),
        lambda: gen_fan(5, 2),
        lambda: max_edge_bound(8, 0),
        lambda: fan_edge_count(5, 2),
        lambda: edge_gap_bound(5, 2),
    ],
)
def test_out_of_range_sizes(call) -> None:
    with pytest.raises(DomainError):
        call()


# -- recognizer -------------------------------------------------------------


def test_recognize_k4_for_k2() -> None:
    report = recognize_domino(Graph.complete(4), 2)
    assert report.verdict
    assert not report.base_case
    assert set(report.per_property) == set(PROPERTY_IDS)


def test_recognize_rejects_c4_at_chordality() -> None:
    report = recognize_domino(Graph.cycle(4), 2)
    assert not report.verdict
    assert "i" in report.failed()


def test_base_case() -> None:
    report = recognize_domino(Graph.complete(2), 2)
    assert report.verdict
    assert report.base_case


@pytest.mark.parametrize("n", range(8, 17))
def test_generators_are_domino_trees(n: int) -> None:
    assert recognize_domino(gen_chain(n, 2), 2).verdict
    assert recognize_domino(gen_fan(n, 2), 2).verdict


def test_k3_chain_is_a_3_domino_tree() -> None:
    assert recognize_domino(gen_chain(11, 3), 3).verdict
    assert recognize_domino(gen_fan(10, 3), 3).verdict


def test_separator_degree_matches_clique_count() -> None:
    graph = gen_fan(9, 2)
    cliques = maximal_cliques(graph)
    for separator in minimal_separators(graph):
        assert connectivity_degree(graph, separator) == sum(separator <= c for c in cliques)


def test_split_clique_fails_degree_two_cover() -> None:
    # {3, 5} becomes an internal separator covered by {2, 3} and {4, 5}
    report = recognize_domino(gen_chain(8, 2).delete_edge(2, 4), 2)
    assert not report.verdict
    assert report.per_property["i"].passed
    assert report.failed() == ["vi"]


def test_thin_external_cliques_fail_valiancy() -> None:
    # two triangles on the separator {0, 1}: each leaves one private vertex
    graph = Graph(4, frozenset({(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)}))
    report = recognize_domino(graph, 2)
    assert not report.verdict
    assert "viii" in report.failed()
    assert "vii" in report.failed()


# -- separator refinement ---------------------------------------------------


def test_refine_separator_on_the_chain() -> None:
    chain = gen_chain(8, 2)
    assert refine_separator(chain, 2, {2, 3}, {4, 5, 6, 7}) == frozenset({4, 5})
    assert refine_separator(gen_chain(12, 2), 2, {2, 3}, range(4, 12)) == frozenset({4, 5})


def test_refine_separator_preconditions() -> None:
    chain = gen_chain(8, 2)
    with pytest.raises(PreconditionError):
        refine_separator(chain, 2, {4, 5}, {6, 7})
    with pytest.raises(PreconditionError):
        refine_separator(chain, 2, {2, 4}, {5, 6, 7})
    with pytest.raises(PreconditionError):
        refine_separator(Graph.cycle(4), 2, {0, 2}, {1})


def _eligible_pairs(graph: Graph, k: int):
    for separator in minimal_separators(graph):
        for augmented in augmented_component_sets(graph, separator):
            if len(augmented - separator) > k:
                yield separator, augmented - separator


@pytest.mark.parametrize("graph", [gen_chain(n, 2) for n in range(8, 17)] + [gen_fan(n, 2) for n in range(6, 17)])
def test_refine_separator_properties(graph: Graph) -> None:
    separators = set(minimal_separators(graph))
    cliques = set(maximal_cliques(graph))
    for separator, component in _eligible_pairs(graph, 2):
        refined = refine_separator(graph, 2, separator, component)
        assert refined in separators
        assert refined < component | separator
        assert not refined <= separator and not separator <= refined
        assert separator | refined in cliques


# -- extremality ------------------------------------------------------------


def test_domino_completion_rejects_wide_graphs() -> None:
    assert domino_completion(Graph.wheel(4), 2) is None


@pytest.mark.parametrize("n", [5, 6])
def test_domino_completion_of_cycles(n: int) -> None:
    plus = domino_completion(Graph.cycle(n), 2)
    assert plus is not None
    assert Graph.cycle(n).edges <= plus.edges
    assert recognize_domino(plus, 2).verdict
    assert is_edge_maximal(plus, 2)


def test_edge_maximality() -> None:
    assert is_edge_maximal(gen_chain(8, 2), 2)
    assert not is_edge_maximal(Graph.cycle(5), 2)
    with pytest.raises(PreconditionError):
        is_edge_maximal(Graph.wheel(4), 2)
