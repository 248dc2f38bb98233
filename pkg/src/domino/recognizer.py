from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable

from ..errors import InternalCheckError, PreconditionError
from ..graph.model import Graph, VertexSet, to_mask
from ..graph.primitives import (
    connectivity_degree,
    is_chordal,
    mask_components,
    maximal_cliques,
    minimal_separators,
    set_key,
)

logger = logging.getLogger(__name__)

PROPERTY_IDS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")


@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    witness: Any = None


@dataclass(frozen=True)
class DominoReport:
    k: int
    verdict: bool
    per_property: dict[str, PropertyCheck] = field(default_factory=dict)
    base_case: bool = False

    def failed(self) -> list[str]:
        return [pid for pid in PROPERTY_IDS if not self.per_property[pid].passed]


class _Structure:
    """Separator and clique data of a graph, with the external/internal split."""

    def __init__(self, graph: Graph, guard: int | None) -> None:
        self.graph = graph
        self.separators = minimal_separators(graph, guard=guard)
        self.cliques = maximal_cliques(graph)
        self.inside = {K: [S for S in self.separators if S <= K] for K in self.cliques}
        self.external_cliques = [K for K in self.cliques if len(self.inside[K]) <= 1]

    def family(self, separator: VertexSet) -> list[VertexSet]:
        """External maximal cliques containing ``separator``."""
        return [K for K in self.external_cliques if separator <= K]

    def is_external(self, separator: VertexSet) -> bool:
        return bool(self.family(separator))

    def degree(self, separator: VertexSet) -> int:
        return connectivity_degree(self.graph, separator)


def _first(items: Iterable[Any]) -> Any:
    return next(iter(items), None)


def _check_chordal(graph: Graph) -> PropertyCheck:
    result = is_chordal(graph)
    return PropertyCheck(result.chordal, None if result.chordal else list(result.witness or ()))


def _check_separator_sizes(data: _Structure, k: int) -> PropertyCheck:
    bad = _first(S for S in data.separators if len(S) != k)
    return PropertyCheck(bad is None, None if bad is None else sorted(bad))


def _check_clique_sizes(data: _Structure, k: int) -> PropertyCheck:
    bad = _first(K for K in data.cliques if not k + 1 <= len(K) <= 2 * k)
    return PropertyCheck(bad is None, None if bad is None else sorted(bad))


def _check_separators_per_clique(data: _Structure) -> PropertyCheck:
    bad = _first(K for K in data.cliques if len(data.inside[K]) > 2)
    if bad is None:
        return PropertyCheck(True)
    return PropertyCheck(False, {"clique": sorted(bad), "separators": [sorted(S) for S in data.inside[bad]]})


def _check_internal_cliques(data: _Structure) -> PropertyCheck:
    for K in data.cliques:
        seps = data.inside[K]
        if len(seps) == 2 and K != seps[0] | seps[1]:
            return PropertyCheck(False, {"clique": sorted(K), "separators": [sorted(S) for S in seps]})
    return PropertyCheck(True)


def _check_internal_degree_two(data: _Structure) -> PropertyCheck:
    for S in data.separators:
        if data.is_external(S) or data.degree(S) != 2:
            continue
        others = [T for T in data.separators if T != S]
        for a, b in combinations(others, 2):
            if S <= a | b:
                return PropertyCheck(False, {"separator": sorted(S), "covered_by": [sorted(a), sorted(b)]})
    return PropertyCheck(True)


def _check_external_degree_two(data: _Structure, k: int) -> PropertyCheck:
    for S in data.separators:
        if not data.is_external(S) or data.degree(S) != 2:
            continue
        union: frozenset[int] = frozenset()
        for K in data.cliques:
            if S <= K:
                union |= K
        if len(union) <= 2 * k:
            return PropertyCheck(False, {"separator": sorted(S), "union": sorted(union)})
    return PropertyCheck(True)


def _check_valiancy(data: _Structure, k: int) -> PropertyCheck:
    for S in data.separators:
        family = data.family(S)
        for K, K2 in combinations(family, 2):
            if len(K - S) + len(K2 - S) <= k:
                return PropertyCheck(
                    False, {"separator": sorted(S), "cliques": [sorted(K), sorted(K2)]}
                )
    return PropertyCheck(True)


def recognize_domino(graph: Graph, k: int, *, guard: int | None = None) -> DominoReport:
    """Check the eight k-domino-tree properties literally.

    ``K_r`` with ``r <= k`` is accepted outright (the properties are still
    reported)."""
    data = _Structure(graph, guard)
    checks = {
        "i": _check_chordal(graph),
        "ii": _check_separator_sizes(data, k),
        "iii": _check_clique_sizes(data, k),
        "iv": _check_separators_per_clique(data),
        "v": _check_internal_cliques(data),
        "vi": _check_internal_degree_two(data),
        "vii": _check_external_degree_two(data, k),
        "viii": _check_valiancy(data, k),
    }
    base_case = graph.order <= k and graph.is_clique(graph.vertices)
    verdict = base_case or all(c.passed for c in checks.values())
    logger.debug("recognize_domino(k=%d): %s", k, "accept" if verdict else "reject")
    return DominoReport(k=k, verdict=verdict, per_property=checks, base_case=base_case)


def refine_separator(
    graph: Graph,
    k: int,
    separator: Iterable[int],
    component: Iterable[int],
    *,
    guard: int | None = None,
) -> VertexSet:
    """A minimal separator ``S'`` deeper inside the component ``C`` of ``D - S``:
    properly inside ``V(C) | S``, incomparable with S, completing S to a
    maximal clique, and leaving ``C - S'`` as a whole component of ``D - S'``.
    The first one in canonical order is returned."""
    s = graph.check_vertices(separator, "separator")
    c = graph.check_vertices(component, "component") - s
    report = recognize_domino(graph, k, guard=guard)
    if not report.verdict:
        raise PreconditionError(f"graph is not a {k}-domino-tree (fails {', '.join(report.failed())})")
    separators = minimal_separators(graph, guard=guard)
    if s not in separators:
        raise PreconditionError(f"{sorted(s)} is not a minimal separator")
    components = mask_components(graph, graph.full_mask & ~to_mask(s))
    if to_mask(c) not in components:
        raise PreconditionError(f"{sorted(c)} is not a component of G - {sorted(s)}")
    if len(c) <= k:
        raise PreconditionError(f"component {sorted(c)} has at most {k} vertices")

    augmented = c | s
    cliques = set(maximal_cliques(graph))
    for candidate in sorted(separators, key=set_key):
        if not candidate < augmented:
            continue
        if candidate <= s or s <= candidate:
            continue
        if s | candidate not in cliques:
            continue
        rest = to_mask(c - candidate)
        if not rest or rest not in mask_components(graph, graph.full_mask & ~to_mask(candidate)):
            continue
        return candidate
    raise InternalCheckError(f"no refinement of separator {sorted(s)} inside {sorted(c)}")
