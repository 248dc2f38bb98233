from __future__ import annotations

import logging
from dataclasses import dataclass

from ..config import SETTINGS, resolve_guard
from ..decomposition.model import (
    ClassicTreeDecomposition,
    LenientTreeDecomposition,
    validate_classic,
    validate_ltd,
)
from ..decomposition.search import decide_width_le_k
from ..errors import DomainError, InternalCheckError, PreconditionError
from ..graph.model import Graph
from .treewidth import treewidth_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GadgetVertex:
    """Where an output vertex comes from: a source vertex, or copy ``copy``
    (1-based) of the midpoint of source edge ``edge``."""

    original: int | None = None
    edge: tuple[int, int] | None = None
    copy: int | None = None

    @property
    def is_original(self) -> bool:
        return self.original is not None


@dataclass(frozen=True)
class GadgetMap:
    source: Graph
    k: int
    output: Graph
    provenance: tuple[GadgetVertex, ...]

    @property
    def paths_per_edge(self) -> int:
        return 2 * self.k - 1

    def midpoints(self) -> list[tuple[int, GadgetVertex]]:
        return [(w, p) for w, p in enumerate(self.provenance) if not p.is_original]


def gadget(graph: Graph, k: int) -> GadgetMap:
    """Replace every edge by ``2k - 1`` internally disjoint paths of length two.

    Source vertices keep their indices; midpoints follow, grouped by source
    edge in sorted order."""
    if k < 1:
        raise DomainError(f"the gadget needs k >= 1, got {k}")
    copies = 2 * k - 1
    provenance = [GadgetVertex(original=v) for v in graph.vertices]
    edges: set[tuple[int, int]] = set()
    for u, v in graph.sorted_edges:
        for c in range(1, copies + 1):
            w = len(provenance)
            provenance.append(GadgetVertex(edge=(u, v), copy=c))
            edges.add((u, w))
            edges.add((v, w))
    output = Graph(len(provenance), frozenset(edges))
    return GadgetMap(source=graph, k=k, output=output, provenance=tuple(provenance))


def adjacency_bag_lemma_check(gadget_map: GadgetMap, decomposition: LenientTreeDecomposition) -> bool:
    """In a width-k decomposition of the gadget, the ends of every source edge
    share a bag."""
    if decomposition.base != gadget_map.output:
        raise PreconditionError("decomposition is not over the gadget output")
    verdict = validate_ltd(decomposition)
    if not verdict.ok:
        raise PreconditionError(f"invalid decomposition: {verdict.detail}")
    if decomposition.width > gadget_map.k:
        raise PreconditionError(f"decomposition width {decomposition.width} exceeds k={gadget_map.k}")
    return all(
        any(u in bag and v in bag for bag in decomposition.bags)
        for u, v in gadget_map.source.sorted_edges
    )


def forward_gadget_decomposition(
    gadget_map: GadgetMap, decomposition: ClassicTreeDecomposition
) -> LenientTreeDecomposition:
    """Width-k lenient decomposition of the gadget from a classic decomposition
    of the source of width at most k - 1: the classic bags, plus a leaf bag for
    every midpoint hanging off a bag that holds both ends of its edge."""
    if decomposition.base != gadget_map.source:
        raise PreconditionError("decomposition is not over the gadget source")
    verdict = validate_classic(decomposition)
    if not verdict.ok:
        raise PreconditionError(f"invalid classic decomposition: {verdict.detail}")
    if decomposition.classic_width > gadget_map.k - 1:
        raise PreconditionError(
            f"classic width {decomposition.classic_width} exceeds k - 1 = {gadget_map.k - 1}"
        )

    bags = list(decomposition.bags)
    edges = list(decomposition.tree.sorted_edges)
    for w, origin in gadget_map.midpoints():
        assert origin.edge is not None
        u, v = origin.edge
        host = next(t for t, bag in enumerate(decomposition.bags) if u in bag and v in bag)
        edges.append((host, len(bags)))
        bags.append(frozenset({w}))

    out = LenientTreeDecomposition.from_parts(gadget_map.output, bags, edges)
    check = validate_ltd(out)
    if not check.ok:
        raise InternalCheckError(f"forward gadget decomposition is invalid: {check.detail}")
    if out.width > gadget_map.k:
        raise InternalCheckError(f"forward gadget decomposition has width {out.width}")
    return out


def verify_reduction(
    graph: Graph,
    k: int,
    *,
    guard: int | None = None,
    treewidth_guard: int | None = None,
    threads: int | None = None,
) -> bool:
    """Check ``tw(G) <= k - 1`` against ``sbn(gadget(G, k)) <= k``.

    A ``False`` return means the two sides disagree, which is a bug."""
    if k < 2:
        raise DomainError("the reduction is only checked for k >= 2")
    tw, classic = treewidth_exact(graph, guard=treewidth_guard)
    gadget_map = gadget(graph, k)
    lenient = decide_width_le_k(
        gadget_map.output, k, guard=resolve_guard(guard, SETTINGS.reduction_guard), threads=threads
    )
    left = tw <= k - 1
    right = lenient is not None

    if left:
        forward_gadget_decomposition(gadget_map, classic)
    if lenient is not None and not adjacency_bag_lemma_check(gadget_map, lenient):
        raise InternalCheckError("a source edge has its ends in no common bag")
    if left != right:
        logger.error("reduction mismatch: tw=%d, gadget width %d %s", tw, k, "found" if right else "refuted")
    return left == right
