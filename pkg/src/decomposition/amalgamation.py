from __future__ import annotations

import logging
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import InternalCheckError, PreconditionError, StructuralError
from ..graph.model import Graph, VertexSet
from ..graph.primitives import augmented_component_sets
from .model import LenientTreeDecomposition, tree_path, validate_ltd

logger = logging.getLogger(__name__)


def completion(decomposition: LenientTreeDecomposition) -> Graph:
    """Supergraph with a clique on every union of two close bags."""
    edges: set[tuple[int, int]] = set()
    for t, t2 in decomposition.close_pairs():
        union = sorted(decomposition.bags[t] | decomposition.bags[t2])
        edges.update(combinations(union, 2))
    base = decomposition.base
    return Graph(base.order, frozenset(edges), labels=base.labels)


def _nearest_trace_path(decomposition: LenientTreeDecomposition, start: int, x: int) -> list[int]:
    """Shortest tree path from ``start`` to the closest node whose bag holds ``x``."""
    tree = decomposition.tree
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        if x in decomposition.bags[t]:
            return tree_path(tree, start, t)
        for w in sorted(tree.neighbors(t)):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    raise PreconditionError(f"vertex {x} appears in no bag")


def _component_vertices(component: Graph | Iterable[int]) -> VertexSet:
    if isinstance(component, Graph):
        if component.origin is None:
            raise StructuralError("component graph does not record its parent vertices")
        return frozenset(component.origin)
    return frozenset(component)


def amalgamated_restriction(
    decomposition: LenientTreeDecomposition,
    separator: Iterable[int],
    component: Graph | Iterable[int],
    node: int,
) -> LenientTreeDecomposition:
    """Restrict to the augmented component ``C`` of ``G - S`` and route every
    ``x`` in S along the shortest tree path from ``node`` to its trace.

    The returned decomposition lives on ``G[V(C)]`` (its ``origin`` maps back
    to G) and holds S in the bag of ``node``."""
    graph = decomposition.base
    s = graph.check_vertices(separator, "separator")
    vc = _component_vertices(component)
    if vc not in augmented_component_sets(graph, s):
        raise PreconditionError(f"{sorted(vc)} is not an augmented component of G - {sorted(s)}")
    if not 0 <= node < decomposition.tree.order:
        raise PreconditionError(f"node {node} is not in the decomposition tree")
    verdict = validate_ltd(decomposition)
    if not verdict.ok:
        raise PreconditionError(f"invalid decomposition: {verdict.detail}")

    routed: dict[int, set[int]] = {t: set() for t in decomposition.nodes}
    for x in sorted(s):
        for t in _nearest_trace_path(decomposition, node, x):
            routed[t].add(x)

    restricted = graph.induced(vc)
    assert restricted.origin is not None
    local = {v: i for i, v in enumerate(restricted.origin)}
    bags = tuple(
        frozenset(local[v] for v in (bag & vc) | routed[t])
        for t, bag in enumerate(decomposition.bags)
    )
    out = LenientTreeDecomposition(base=restricted, tree=decomposition.tree, bags=bags)
    check = validate_ltd(out)
    if not check.ok:
        raise InternalCheckError(f"amalgamated restriction is invalid: {check.detail}")
    if not {local[x] for x in s} <= out.bags[node]:
        raise InternalCheckError("separator missing from the anchor bag")
    return out


def s_amalgamation(
    parts: Sequence[tuple[LenientTreeDecomposition, int]],
    separator: Iterable[int],
    base: Graph,
) -> LenientTreeDecomposition:
    """Join decompositions of the augmented components of ``base - S`` through
    a new node whose bag is S."""
    s = base.check_vertices(separator, "separator")
    if not s:
        raise PreconditionError("the amalgamation separator must be nonempty")
    pieces = []
    for decomposition, anchor in parts:
        origin = decomposition.base.origin
        if origin is None:
            raise StructuralError("part decomposition is not over an induced subgraph")
        pieces.append((decomposition, anchor, origin))

    expected = sorted(augmented_component_sets(base, s), key=sorted)
    offered = sorted((frozenset(origin) for _, _, origin in pieces), key=sorted)
    if expected != offered:
        raise StructuralError("the parts do not tile the graph along the separator")

    bags: list[frozenset[int]] = []
    edges: list[tuple[int, int]] = []
    anchors: list[int] = []
    for decomposition, anchor, origin in pieces:
        offset = len(bags)
        lifted = [frozenset(origin[v] for v in bag) for bag in decomposition.bags]
        if not s <= lifted[anchor]:
            raise PreconditionError(f"separator {sorted(s)} is not inside the bag of anchor {anchor}")
        bags.extend(lifted)
        edges.extend((a + offset, b + offset) for a, b in decomposition.tree.sorted_edges)
        anchors.append(anchor + offset)
    center = len(bags)
    bags.append(s)
    edges.extend((a, center) for a in anchors)

    out = LenientTreeDecomposition.from_parts(base, bags, edges)
    verdict = validate_ltd(out)
    if not verdict.ok:
        raise InternalCheckError(f"amalgamation is invalid: {verdict.detail}")
    return out
