from __future__ import annotations

import logging

from ..config import SETTINGS, resolve_guard
from ..decomposition.model import ClassicTreeDecomposition, validate_classic
from ..errors import InternalCheckError, check_guard
from ..graph.model import Graph, from_mask, iter_bits
from ..graph.primitives import neighborhood, reach

logger = logging.getLogger(__name__)


def _q_set(graph: Graph, eliminated: int, v: int) -> frozenset[int]:
    """Vertices outside ``eliminated | {v}`` reachable from v through ``eliminated``;
    the later neighbours of v when it is eliminated after ``eliminated``."""
    inner = reach(graph, (1 << v), eliminated | (1 << v))
    return from_mask(neighborhood(graph, inner) & ~eliminated & ~(1 << v))


def _elimination_order(graph: Graph) -> tuple[int, list[int]]:
    """Subset dynamic programme: ``best[S]`` is the least width of eliminating
    exactly the vertices of S first."""
    best: dict[int, int] = {0: -1}
    choice: dict[int, int] = {}
    full = graph.full_mask
    by_size: list[list[int]] = [[] for _ in range(graph.order + 1)]
    for mask in range(full + 1):
        by_size[mask.bit_count()].append(mask)
    for size in range(1, graph.order + 1):
        for mask in by_size[size]:
            value = None
            pick = -1
            for v in iter_bits(mask):
                rest = mask & ~(1 << v)
                cost = max(best[rest], len(_q_set(graph, rest, v)))
                if value is None or cost < value:
                    value, pick = cost, v
            best[mask] = value  # type: ignore[assignment]
            choice[mask] = pick
    order: list[int] = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask &= ~(1 << v)
    order.reverse()
    return best[full], order


def _decomposition_from_order(graph: Graph, order: list[int]) -> ClassicTreeDecomposition:
    """One bag per vertex: the vertex plus its later neighbours in the filled
    graph. Each bag hangs below the bag of its earliest later neighbour."""
    position = {v: i for i, v in enumerate(order)}
    bags: list[frozenset[int]] = []
    eliminated = 0
    for v in order:
        bags.append(_q_set(graph, eliminated, v) | {v})
        eliminated |= 1 << v
    edges = []
    last = len(order) - 1
    for i, v in enumerate(order[:-1]):
        later = bags[i] - {v}
        parent = min((position[w] for w in later), default=last)
        edges.append((i, parent))
    return ClassicTreeDecomposition.from_parts(graph, bags, edges)


def treewidth_exact(graph: Graph, *, guard: int | None = None) -> tuple[int, ClassicTreeDecomposition]:
    """Exact treewidth (classic convention: largest bag minus one) with a
    witness decomposition."""
    check_guard("treewidth_exact", graph.order, resolve_guard(guard, SETTINGS.treewidth_guard))
    if graph.order == 0:
        return -1, ClassicTreeDecomposition.from_parts(graph, [()])
    value, order = _elimination_order(graph)
    witness = _decomposition_from_order(graph, order)
    verdict = validate_classic(witness)
    if not verdict.ok:
        raise InternalCheckError(f"elimination order gave an invalid decomposition: {verdict.detail}")
    if witness.classic_width != value:
        raise InternalCheckError(f"witness width {witness.classic_width} differs from treewidth {value}")
    logger.debug("treewidth %d via order %s", value, order)
    return value, witness
