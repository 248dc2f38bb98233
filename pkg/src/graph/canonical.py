from __future__ import annotations

import logging
from typing import Iterator

from ..config import SETTINGS, resolve_guard
from ..errors import ParseError, check_guard
from .model import Graph

logger = logging.getLogger(__name__)

Partition = list[list[int]]


def _refine(graph: Graph, partition: Partition) -> Partition:
    """Split cells by neighbour counts per cell until the partition is equitable."""
    adj = graph.adjacency
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in partition]
        refined: Partition = []
        changed = False
        for cell in partition:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                refined.append(groups[sig])
        partition = refined
        if not changed:
            return partition


def _twin_representatives(graph: Graph, cell: list[int]) -> list[int]:
    """One vertex per twin class of ``cell``; swapping two twins is an
    automorphism fixing every other vertex."""
    adj = graph.adjacency
    reps: list[int] = []
    for v in cell:
        if not any(adj[r] & ~(1 << v) == adj[v] & ~(1 << r) for r in reps):
            reps.append(v)
    return reps


def _leaf_code(graph: Graph, order: list[int]) -> str:
    adj = graph.adjacency
    bits = []
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            bits.append("1" if row >> order[i] & 1 else "0")
    return "".join(bits)


def canonical_code(graph: Graph, *, guard: int | None = None) -> str:
    """Isomorphism-invariant code ``"<n>:<bits>"``.

    Individualisation-refinement: one vertex per twin class of the first
    non-singleton cell is tried, and the least adjacency bitstring over all
    leaves wins. There is no automorphism pruning beyond twins, so highly
    symmetric graphs without twins (long cycles, the Petersen graph) still
    branch on every vertex of every cell; the size guard bounds the damage."""
    check_guard("canonical_code", graph.order, resolve_guard(guard, SETTINGS.size_guard))
    n = graph.order
    if n == 0:
        return "0:"
    best: list[str] = []

    def search(partition: Partition) -> None:
        partition = _refine(graph, partition)
        target = next((i for i, cell in enumerate(partition) if len(cell) > 1), None)
        if target is None:
            code = _leaf_code(graph, [cell[0] for cell in partition])
            if not best or code < best[0]:
                best[:] = [code]
            return
        cell = partition[target]
        for v in _twin_representatives(graph, cell):
            rest = [w for w in cell if w != v]
            search(partition[:target] + [[v], rest] + partition[target + 1 :])

    search([list(graph.vertices)])
    return f"{n}:{best[0]}"


def graph_from_code(code: str) -> Graph:
    head, _, bits = code.partition(":")
    if not head.isdigit():
        raise ParseError(f"malformed canonical code {code!r}")
    n = int(head)
    if len(bits) != n * (n - 1) // 2:
        raise ParseError(f"canonical code {code!r} has the wrong length")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos] == "1":
                edges.append((i, j))
            pos += 1
    return Graph(n, frozenset(edges))


def are_isomorphic(left: Graph, right: Graph) -> bool:
    return left.order == right.order and canonical_code(left) == canonical_code(right)


def enumerate_graphs(n: int, *, guard: int | None = None) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, by edge count.

    Orderly generation: each level adds one edge in every possible way to the
    previous level's representatives and keeps one graph per canonical code."""
    check_guard("enumerate_graphs", n, resolve_guard(guard, SETTINGS.size_guard))
    level = {canonical_code(Graph(n)): Graph(n)}
    edges = 0
    while level:
        for code in sorted(level):
            yield graph_from_code(code)
        nxt: dict[str, Graph] = {}
        for code in sorted(level):
            base = level[code]
            for u, v in base.non_edges():
                grown = base.add_edge(u, v)
                grown_code = canonical_code(grown)
                if grown_code not in nxt:
                    nxt[grown_code] = grown
        edges += 1
        logger.debug("enumerate_graphs(%d): %d classes with %d edges", n, len(nxt), edges)
        level = nxt
