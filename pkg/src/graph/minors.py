from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from ..config import SETTINGS, resolve_guard
from ..errors import InternalCheckError, check_guard
from .model import Graph, MinorModel, from_mask, to_mask
from .primitives import connected_masks, mask_is_connected, neighborhood

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorStep:
    operation: str  # "delete_vertex" | "delete_edge" | "contract_edge"
    target: tuple[int, ...]
    graph: Graph

    def describe(self) -> str:
        return f"{self.operation} {'-'.join(str(v) for v in self.target)}"


def one_step_minors(graph: Graph) -> list[MinorStep]:
    steps = [MinorStep("delete_vertex", (v,), graph.delete_vertex(v)) for v in graph.vertices]
    for u, v in graph.sorted_edges:
        steps.append(MinorStep("delete_edge", (u, v), graph.delete_edge(u, v)))
    for u, v in graph.sorted_edges:
        steps.append(MinorStep("contract_edge", (u, v), graph.contract_edge(u, v)))
    return steps


def verify_minor_model(model: MinorModel) -> bool:
    host, pattern = model.host, model.pattern
    if len(model.branch_sets) != pattern.order:
        return False
    used = 0
    masks: list[int] = []
    for branch in model.branch_sets:
        if not branch or any(not 0 <= v < host.order for v in branch):
            return False
        mask = to_mask(branch)
        if used & mask or not mask_is_connected(host, mask):
            return False
        used |= mask
        masks.append(mask)
    return all(neighborhood(host, masks[u]) & masks[v] for u, v in pattern.edges)


@lru_cache(maxsize=256)
def _connected_masks(host: Graph) -> tuple[int, ...]:
    return connected_masks(host)


def _placement_order(pattern: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    remaining = set(pattern.vertices)
    while remaining:
        v = max(
            remaining,
            key=lambda w: ((pattern.adjacency[w] & placed).bit_count(), pattern.degree(w), -w),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def find_minor(host: Graph, pattern: Graph, *, guard: int | None = None) -> MinorModel | None:
    """Exhaustive branch-set search; ``None`` means no model exists."""
    check_guard("find_minor pattern", pattern.order, resolve_guard(guard, SETTINGS.pattern_guard))
    if pattern.order > host.order or pattern.size > host.size:
        return None
    if pattern.order == 0:
        return MinorModel(pattern=pattern, host=host, branch_sets=())

    order = _placement_order(pattern)
    position = {v: i for i, v in enumerate(order)}
    # earlier[i]: already-placed pattern neighbours of order[i]
    earlier = [[w for w in pattern.neighbors(v) if position[w] < i] for i, v in enumerate(order)]
    # pattern vertices whose last neighbour is placed at depth i stop mattering after it
    last_need = {
        v: max([position[w] for w in pattern.neighbors(v)] + [position[v]]) for v in order
    }
    candidates = _connected_masks(host)
    n = pattern.order
    failed: set[tuple[int, int, tuple[int, ...]]] = set()
    assigned: dict[int, int] = {}

    def state_key(depth: int, used: int) -> tuple[int, int, tuple[int, ...]]:
        live = tuple(assigned[v] for v in order[:depth] if last_need[v] >= depth)
        return depth, used, live

    def search(depth: int, used: int) -> bool:
        if depth == n:
            return True
        free = host.full_mask & ~used
        if free.bit_count() < n - depth:
            return False
        key = state_key(depth, used)
        if key in failed:
            return False
        v = order[depth]
        need = [assigned[w] for w in earlier[depth]]
        reserve = n - depth - 1
        for mask in candidates:
            if mask & used:
                continue
            if (free & ~mask).bit_count() < reserve:
                continue
            if need:
                around = neighborhood(host, mask)
                if not all(around & other for other in need):
                    continue
            assigned[v] = mask
            if search(depth + 1, used | mask):
                return True
            del assigned[v]
        failed.add(key)
        return False

    if not search(0, 0):
        return None
    model = MinorModel(
        pattern=pattern,
        host=host,
        branch_sets=tuple(from_mask(assigned[v]) for v in pattern.vertices),
    )
    if not verify_minor_model(model):
        raise InternalCheckError("minor search produced an invalid model")
    return model


def is_minor(host: Graph, pattern: Graph, *, guard: int | None = None) -> bool:
    return find_minor(host, pattern, guard=guard) is not None
