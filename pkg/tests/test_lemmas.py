from __future__ import annotations

import pytest

from src.decomposition.amalgamation import amalgamated_restriction, completion, s_amalgamation
from src.decomposition.extreme import extremize, is_extreme
from src.decomposition.lemmas import (
    amalgamation_width_holds,
    bag_linkage_holds,
    clique_lemma_holds,
    completion_separator_bijection,
    convexity_lemma_holds,
    separator_lemma_holds,
)
from src.decomposition.ltp import ltp_witness
from src.decomposition.model import LenientTreeDecomposition, validate_ltd
from src.decomposition.search import decide_width_le_k
from src.domino.generators import gen_chain
from src.errors import PreconditionError, StructuralError
from src.graph.minors import verify_minor_model
from src.graph.model import Graph
from src.graph.primitives import augmented_components, is_chordal, lexicographic_product


def chain_decomposition() -> LenientTreeDecomposition:
    """The path of blocks {0,1} {2,3} {4,5} {6,7} under gen_chain(8, 2)."""
    return LenientTreeDecomposition.from_parts(
        gen_chain(8, 2), [{0, 1}, {2, 3}, {4, 5}, {6, 7}], [(0, 1), (1, 2), (2, 3)]
    )


def path_decomposition() -> LenientTreeDecomposition:
    return LenientTreeDecomposition.from_parts(
        Graph.path(5), [{0, 1}, {1, 2}, {2, 3}, {3, 4}], [(0, 1), (1, 2), (2, 3)]
    )


# -- completion and amalgamation --------------------------------------------


def test_completion() -> None:
    k4 = LenientTreeDecomposition.from_parts(Graph.path(4), [{0, 1}, {2, 3}], [(0, 1)])
    assert completion(k4) == Graph.complete(4)
    assert completion(chain_decomposition()) == gen_chain(8, 2)
    assert is_chordal(completion(path_decomposition())).chordal


def test_amalgamated_restriction_routes_the_separator() -> None:
    d = path_decomposition()
    left = amalgamated_restriction(d, {2}, {0, 1, 2}, 1)
    assert left.base.origin == (0, 1, 2)
    assert left.bags == (frozenset({0, 1}), frozenset({1, 2}), frozenset({2}), frozenset())
    assert validate_ltd(left).ok

    right = amalgamated_restriction(d, {2}, {2, 3, 4}, 1)
    assert right.base.origin == (2, 3, 4)
    assert right.bags[1] == frozenset({0})


def test_amalgamated_restriction_accepts_component_graphs() -> None:
    d = path_decomposition()
    first, second = augmented_components(d.base, {2})
    assert amalgamated_restriction(d, {2}, first, 1).base == first
    assert amalgamated_restriction(d, {2}, second, 2).width <= 2


def test_amalgamated_restriction_rejects_non_components() -> None:
    with pytest.raises(PreconditionError):
        amalgamated_restriction(path_decomposition(), {2}, {0, 1}, 1)
    with pytest.raises(PreconditionError):
        amalgamated_restriction(path_decomposition(), {2}, {0, 1, 2}, 9)


def test_s_amalgamation_glues_the_parts() -> None:
    d = path_decomposition()
    parts = [
        (amalgamated_restriction(d, {2}, {0, 1, 2}, 1), 1),
        (amalgamated_restriction(d, {2}, {2, 3, 4}, 1), 1),
    ]
    glued = s_amalgamation(parts, {2}, d.base)
    assert validate_ltd(glued).ok
    assert len(glued.bags) == 9
    assert glued.bags[-1] == frozenset({2})
    assert glued.tree.degree(8) == 2
    assert glued.width <= 2


def test_s_amalgamation_preconditions() -> None:
    d = path_decomposition()
    left = (amalgamated_restriction(d, {2}, {0, 1, 2}, 1), 1)
    with pytest.raises(StructuralError):
        s_amalgamation([left], {2}, d.base)
    with pytest.raises(PreconditionError):
        s_amalgamation([left], set(), d.base)


# -- lemma checks -----------------------------------------------------------


def test_lemmas_hold_on_the_chain() -> None:
    d = chain_decomposition()
    assert is_extreme(d).ok
    for check in (
        separator_lemma_holds,
        clique_lemma_holds,
        convexity_lemma_holds,
        completion_separator_bijection,
        bag_linkage_holds,
        amalgamation_width_holds,
    ):
        verdict = check(d)
        assert verdict.ok, (check.__name__, verdict.detail)


def test_lemmas_on_searched_decompositions() -> None:
    for graph in (Graph.wheel(4), Graph.cycle(6), Graph.complete(4)):
        found = decide_width_le_k(graph, 3 if graph.order == 5 else 2)
        assert found is not None
        d = extremize(found)
        assert completion_separator_bijection(d).ok
        assert bag_linkage_holds(d).ok
        assert is_chordal(completion(d)).chordal


def test_convexity_on_given_sets() -> None:
    d = chain_decomposition()
    assert convexity_lemma_holds(d, [{0, 2, 4, 6}, {1, 3}]).ok


def test_extreme_only_checks_refuse_other_input() -> None:
    d = path_decomposition()
    assert not is_extreme(d).ok
    assert clique_lemma_holds(d).ok
    with pytest.raises(PreconditionError):
        separator_lemma_holds(d)
    with pytest.raises(PreconditionError):
        bag_linkage_holds(d)


# -- product witness --------------------------------------------------------


def test_ltp_witness_for_k4() -> None:
    d = LenientTreeDecomposition.from_parts(Graph.complete(4), [{0, 1}, {2, 3}], [(0, 1)])
    witness = ltp_witness(d)
    assert witness.k == 2
    assert witness.model.host == Graph.complete(4)
    assert witness.model.branch_sets == tuple(frozenset({v}) for v in range(4))


def test_ltp_witness_for_the_chain() -> None:
    witness = ltp_witness(chain_decomposition())
    assert witness.model.host == lexicographic_product(witness.tree, Graph.complete(2))
    assert verify_minor_model(witness.model)


def test_ltp_witness_needs_an_extreme_decomposition() -> None:
    with pytest.raises(PreconditionError):
        ltp_witness(path_decomposition())
    with pytest.raises(PreconditionError):
        ltp_witness(LenientTreeDecomposition.from_parts(Graph(0), [()]))
