from __future__ import annotations

import pytest

from src.domino.generators import gen_chain
from src.graph.canonical import are_isomorphic, canonical_code
from src.graph.model import Graph
from src.graph.primitives import is_biconnected
from src.obstructions import builtin_obstructions, excludes_Z, is_minor_minimal, obstruction_search
from src.storage import InMemoryDecisionStore


def test_builtin_records_check() -> None:
    records = builtin_obstructions()
    assert [r.name for r in records] == ["W4", "H1", "H2"]
    for record in records:
        assert record.k == 2
        assert record.check().ok
        assert all(entry.fits for entry in record.minimality_log)


def test_builtins_are_distinct_biconnected_graphs(named: dict[str, Graph]) -> None:
    assert are_isomorphic(named["W4"], Graph.wheel(4))
    assert (named["H1"].order, named["H1"].size) == (6, 9)
    assert len({canonical_code(g) for g in named.values()}) == 3
    assert all(is_biconnected(g) for g in named.values())


@pytest.mark.parametrize(
    ("graph", "expected"),
    [
        (Graph.complete(4), True),
        (Graph.cycle(6), True),
        (gen_chain(8, 2), True),
        (Graph.wheel(4), False),
        (Graph.complete(5), False),
    ],
)
def test_excludes_Z(graph: Graph, expected: bool) -> None:
    assert excludes_Z(graph) is expected


def test_wheel_is_minor_minimal() -> None:
    verdict = is_minor_minimal(Graph.wheel(4), 2)
    assert verdict.ok
    assert all(entry.fits for entry in verdict.witness)


def test_member_is_not_an_obstruction() -> None:
    verdict = is_minor_minimal(Graph.complete(4), 2)
    assert not verdict.ok
    assert verdict.clause == "member"


def test_k5_has_a_wide_minor() -> None:
    verdict = is_minor_minimal(Graph.complete(5), 2)
    assert not verdict.ok
    assert verdict.clause == "minor"


def test_search_below_the_wheel_is_empty() -> None:
    assert obstruction_search(2, 4, store=InMemoryDecisionStore(), threads=1) == []


@pytest.mark.slow
def test_search_recovers_the_builtins() -> None:
    store = InMemoryDecisionStore()
    found = obstruction_search(2, 6, store=store, threads=2)
    assert [r.graph.order for r in found] == [5, 6, 6]
    assert sorted(canonical_code(r.graph) for r in found) == sorted(
        canonical_code(r.graph) for r in builtin_obstructions()
    )
    assert all(is_biconnected(r.graph) for r in found)
    assert store.hits > 0


def test_triangle_is_the_only_obstruction_for_width_one() -> None:
    found = obstruction_search(1, 4, store=InMemoryDecisionStore(), threads=1)
    assert [canonical_code(r.graph) for r in found] == [canonical_code(Graph.complete(3))]
    assert is_minor_minimal(Graph.complete(3), 1).ok


@pytest.mark.slow
def test_search_on_seven_vertices_finds_no_new_obstruction() -> None:
    found = obstruction_search(2, 7, store=InMemoryDecisionStore(), threads=2)
    assert len(found) == 3
    assert sorted(canonical_code(r.graph) for r in found) == sorted(
        canonical_code(r.graph) for r in builtin_obstructions()
    )
