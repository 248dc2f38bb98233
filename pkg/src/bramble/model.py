from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import PreconditionError, StructuralError
from ..graph.model import Graph, VertexSet, from_mask, to_mask
from ..graph.primitives import mask_is_connected, neighborhood, separates
from ..verdict import Verdict
from .hitting_set import minimum_cover

STRICT = "strict"
TOUCHING = "touching"
MODES = (STRICT, TOUCHING)


@dataclass(frozen=True)
class StrictBramble:
    """A family of connected vertex sets that pairwise intersect
    (``strict``) or pairwise touch (``touching``, the classic notion)."""

    base: Graph
    sets: tuple[VertexSet, ...]
    mode: str = STRICT

    @classmethod
    def of(cls, base: Graph, sets: Iterable[Iterable[int]], mode: str = STRICT) -> StrictBramble:
        return cls(base=base, sets=tuple(frozenset(s) for s in sets), mode=mode)

    @property
    def masks(self) -> list[int]:
        return [to_mask(s) for s in self.sets]

    def canonical_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(s)) for s in self.sets))


def compatible(graph: Graph, left: int, right: int, mode: str) -> bool:
    if left & right:
        return True
    return mode == TOUCHING and bool(neighborhood(graph, left) & right)


def validate_bramble(bramble: StrictBramble) -> Verdict:
    if bramble.mode not in MODES:
        raise StructuralError(f"unknown bramble mode {bramble.mode!r}")
    graph = bramble.base
    for s in bramble.sets:
        graph.check_vertices(s, "bramble set")

    masks = bramble.masks
    for i, mask in enumerate(masks):
        if not mask:
            return Verdict.invalid("nonempty", witness=i, detail=f"set #{i} is empty")
        if not mask_is_connected(graph, mask):
            return Verdict.invalid(
                "connected", witness=sorted(bramble.sets[i]), detail=f"set #{i} is not connected"
            )
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not compatible(graph, masks[i], masks[j], bramble.mode):
                clause = "intersecting" if bramble.mode == STRICT else "touching"
                return Verdict.invalid(
                    clause,
                    witness=(sorted(bramble.sets[i]), sorted(bramble.sets[j])),
                    detail=f"sets #{i} and #{j} are not {clause}",
                )
    return Verdict.valid()


def covers(vertices: Iterable[int], bramble: StrictBramble) -> bool:
    s = to_mask(vertices)
    return all(mask & s for mask in bramble.masks)


def bramble_order(bramble: StrictBramble) -> tuple[int, VertexSet]:
    result = minimum_cover(bramble.masks)
    assert result is not None  # one vertex per set always covers
    size, cover = result
    return size, from_mask(cover)


def check_cover_separator(
    bramble: StrictBramble,
    xs: Iterable[int],
    ys: Iterable[int],
    separator: Iterable[int],
) -> bool:
    """If X and Y cover the bramble, so does every (X,Y)-separator."""
    graph = bramble.base
    x = graph.check_vertices(xs, "X")
    y = graph.check_vertices(ys, "Y")
    s = graph.check_vertices(separator, "S")
    if not covers(x, bramble) or not covers(y, bramble):
        raise PreconditionError("X and Y must both cover the bramble")
    if not separates(graph, s, x, y):
        raise PreconditionError(f"{sorted(s)} does not separate {sorted(x)} from {sorted(y)}")
    return covers(s, bramble)

