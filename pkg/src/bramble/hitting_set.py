"""Exact minimum hitting set over vertex bitmasks."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..graph.model import iter_bits


def _reduce(sets: Iterable[int]) -> list[int]:
    """Drop duplicates and every set that contains a smaller one."""
    unique = sorted(set(sets), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for mask in unique:
        if not any(small & mask == small for small in kept):
            kept.append(mask)
    return kept


def _disjoint_lower_bound(sets: Sequence[int]) -> int:
    used = 0
    count = 0
    for mask in sets:
        if not mask & used:
            used |= mask
            count += 1
    return count


def find_cover(sets: Sequence[int], size: int) -> int | None:
    """Lexicographically least cover with exactly ``size`` vertices, if any."""
    family = _reduce(sets)
    if not family:
        return 0 if size == 0 else None
    if any(m == 0 for m in family):
        return None
    universe = 0
    for m in family:
        universe |= m
    vertices = list(iter_bits(universe))

    def search(start: int, chosen: int, left: int, unhit: list[int]) -> int | None:
        if not unhit:
            return chosen if left == 0 else None
        if left == 0:
            return None
        below = (1 << vertices[start]) - 1 if start < len(vertices) else universe
        # a set whose members all lie before the next candidate can no longer be hit
        if any(m & ~below == 0 for m in unhit):
            return None
        tail = [m & ~below for m in unhit]
        if _disjoint_lower_bound(sorted(tail, key=lambda m: (m.bit_count(), m))) > left:
            return None
        for i in range(start, len(vertices)):
            bit = 1 << vertices[i]
            rest = [m for m in unhit if not m & bit]
            found = search(i + 1, chosen | bit, left - 1, rest)
            if found is not None:
                return found
        return None

    return search(0, 0, size, list(family))


def minimum_cover(sets: Sequence[int], *, limit: int | None = None) -> tuple[int, int] | None:
    """``(size, cover_mask)`` of the lexicographically least minimum cover.

    Sizes are tried in increasing order; ``None`` when no cover of size at
    most ``limit`` exists."""
    family = _reduce(sets)
    top = len(family) if limit is None else min(limit, len(family))
    for size in range(top + 1):
        cover = find_cover(family, size)
        if cover is not None:
            return size, cover
    return None
