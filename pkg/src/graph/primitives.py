from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from ..config import SETTINGS, resolve_guard
from ..errors import InternalCheckError, PreconditionError, check_guard
from .model import Graph, VertexSet, from_mask, iter_bits, to_mask

logger = logging.getLogger(__name__)


def set_key(s: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Canonical order for vertex sets: by size, then by sorted members."""
    members = tuple(sorted(s))
    return len(members), members


# -- bitmask helpers ----------------------------------------------------------


def neighborhood(graph: Graph, mask: int) -> int:
    """Open neighbourhood of a vertex mask."""
    adj = graph.adjacency
    out = 0
    for v in iter_bits(mask):
        out |= adj[v]
    return out & ~mask


def reach(graph: Graph, start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``start & allowed`` inside ``allowed``."""
    adj = graph.adjacency
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def mask_components(graph: Graph, mask: int) -> list[int]:
    """Components of ``G[mask]`` ordered by their lowest vertex."""
    out: list[int] = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = reach(graph, low, mask)
        out.append(comp)
        rest &= ~comp
    return out


def connected_masks(graph: Graph) -> tuple[int, ...]:
    """Every nonempty connected vertex mask, smallest first."""
    found = {1 << v for v in graph.vertices}
    frontier = set(found)
    while frontier:
        grown: set[int] = set()
        for mask in frontier:
            ext = neighborhood(graph, mask)
            while ext:
                low = ext & -ext
                ext ^= low
                bigger = mask | low
                if bigger not in found:
                    found.add(bigger)
                    grown.add(bigger)
        frontier = grown
    return tuple(sorted(found, key=lambda m: (m.bit_count(), m)))


def mask_is_connected(graph: Graph, mask: int) -> bool:
    if not mask:
        return True
    return reach(graph, mask & -mask, mask) == mask


# -- public primitives --------------------------------------------------------


def connected_components(graph: Graph) -> list[VertexSet]:
    comps = (frozenset(c) for c in nx.connected_components(graph.to_networkx()))
    return sorted(comps, key=min)


def augmented_component_sets(graph: Graph, separator: Iterable[int]) -> list[VertexSet]:
    """Vertex sets ``V(C) | S`` for the components C of ``G - S``."""
    s = to_mask(graph.check_vertices(separator, "separator"))
    return [from_mask(c | s) for c in mask_components(graph, graph.full_mask & ~s)]


def augmented_components(graph: Graph, separator: Iterable[int]) -> list[Graph]:
    return [graph.induced(vs) for vs in augmented_component_sets(graph, separator)]


def connectivity_degree(graph: Graph, separator: Iterable[int]) -> int:
    s = to_mask(separator)
    return len(mask_components(graph, graph.full_mask & ~s))


def is_connected_set(graph: Graph, vertices: Iterable[int]) -> bool:
    # The empty set counts as connected.
    return mask_is_connected(graph, to_mask(graph.check_vertices(vertices)))


def minimal_separators(graph: Graph, *, guard: int | None = None) -> list[VertexSet]:
    """All minimal separators, by closing the seed family ``N(C)`` for C a
    component of ``G - N[v]`` under ``S -> N(C)`` for C a component of
    ``G - (S | N(x))``, x in S. Sorted by size, then members."""
    check_guard("minimal_separators", graph.order, resolve_guard(guard, SETTINGS.size_guard))
    full = graph.full_mask
    adj = graph.adjacency
    found: set[int] = set()
    queue: list[int] = []

    def offer(sep: int) -> None:
        if sep not in found:
            found.add(sep)
            queue.append(sep)

    for v in graph.vertices:
        for comp in mask_components(graph, full & ~(adj[v] | 1 << v)):
            offer(neighborhood(graph, comp))

    while queue:
        sep = queue.pop()
        for x in iter_bits(sep):
            for comp in mask_components(graph, full & ~(sep | adj[x])):
                offer(neighborhood(graph, comp))

    return sorted((from_mask(s) for s in found), key=set_key)


def separates(graph: Graph, separator: Iterable[int], xs: Iterable[int], ys: Iterable[int]) -> bool:
    """True iff every X-Y path meets the separator."""
    s = to_mask(separator)
    x = to_mask(xs) & ~s
    y = to_mask(ys) & ~s
    return not reach(graph, x, graph.full_mask & ~s) & y


def disjoint_paths(graph: Graph, xs: Iterable[int], ys: Iterable[int]) -> list[tuple[int, ...]]:
    """Maximum family of vertex-disjoint X-Y paths (Menger).

    The count is checked against a minimum X-Y vertex separator."""
    x_set = graph.check_vertices(xs, "X")
    y_set = graph.check_vertices(ys, "Y")
    if not x_set or not y_set:
        raise PreconditionError("disjoint_paths needs nonempty X and Y")

    source, sink = ("source",), ("sink",)
    aux = nx.Graph(graph.to_networkx())
    aux.add_edges_from((source, v) for v in sorted(x_set))
    aux.add_edges_from((v, sink) for v in sorted(y_set))
    if not nx.has_path(aux, source, sink):
        return []

    paths: list[tuple[int, ...]] = []
    for raw in nx.node_disjoint_paths(aux, source, sink):
        inner = raw[1:-1]
        start = max(i for i, v in enumerate(inner) if v in x_set)
        end = next(i for i in range(start, len(inner)) if inner[i] in y_set)
        paths.append(tuple(inner[start : end + 1]))
    paths.sort()

    cut = nx.minimum_node_cut(aux, source, sink)
    if len(cut) != len(paths):
        raise InternalCheckError(
            f"Menger mismatch: {len(paths)} disjoint paths but a separator of size {len(cut)}"
        )
    return paths


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    elimination_order: tuple[int, ...] | None = None
    cliques: tuple[VertexSet, ...] | None = None
    witness: tuple[int, ...] | None = None  # chordless cycle of length >= 4

    def __bool__(self) -> bool:
        return self.chordal


def _maximum_cardinality_order(graph: Graph) -> list[int]:
    weight = [0] * graph.order
    visited = [False] * graph.order
    order: list[int] = []
    for _ in graph.vertices:
        v = max((w for w in graph.vertices if not visited[w]), key=lambda w: (weight[w], -w))
        visited[v] = True
        order.append(v)
        for w in iter_bits(graph.adjacency[v]):
            if not visited[w]:
                weight[w] += 1
    return order


def is_perfect_elimination_order(graph: Graph, order: Iterable[int]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    for v, i in position.items():
        later = [w for w in graph.neighbors(v) if position[w] > i]
        if not graph.is_clique(later):
            return False
    return True


def is_chordal(graph: Graph) -> ChordalityResult:
    g = graph.to_networkx()
    if not nx.is_chordal(g):
        witness = next(c for c in nx.chordless_cycles(g) if len(c) >= 4)
        return ChordalityResult(chordal=False, witness=tuple(witness))

    peo = tuple(reversed(_maximum_cardinality_order(graph)))
    if not is_perfect_elimination_order(graph, peo):
        raise InternalCheckError("maximum cardinality search produced no elimination order")
    cliques = tuple(sorted((frozenset(c) for c in nx.chordal_graph_cliques(g)), key=set_key))
    return ChordalityResult(chordal=True, elimination_order=peo, cliques=cliques)


def maximal_cliques(graph: Graph) -> list[VertexSet]:
    return sorted((frozenset(c) for c in nx.find_cliques(graph.to_networkx())), key=set_key)


def is_biconnected(graph: Graph) -> bool:
    if graph.order < 2:
        return False
    return nx.is_biconnected(graph.to_networkx())


def lexicographic_product(left: Graph, right: Graph) -> Graph:
    """``(u, v) ~ (w, z)`` iff ``u ~ w``, or ``u == w`` and ``v ~ z``.

    Vertex ``(u, v)`` gets index ``u * |V(right)| + v``."""
    if left.order == 0 or right.order == 0:
        raise PreconditionError("lexicographic_product needs two nonempty graphs")
    width = right.order
    product = nx.lexicographic_product(left.to_networkx(), right.to_networkx())
    edges = frozenset(
        (u * width + v, w * width + z) for (u, v), (w, z) in product.edges()
    )
    return Graph(left.order * width, edges)
