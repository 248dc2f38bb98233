from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import networkx as nx

from ..errors import StructuralError

VertexSet = frozenset[int]
Edge = tuple[int, int]


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


def _normalize_edges(order: int, edges: Iterable[Iterable[int]]) -> frozenset[Edge]:
    out: set[Edge] = set()
    for raw in edges:
        pair = tuple(int(x) for x in raw)
        if len(pair) != 2:
            raise StructuralError(f"edge {raw!r} does not have two endpoints")
        u, v = pair
        if u == v:
            raise StructuralError(f"self-loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise StructuralError(f"edge {u}-{v} leaves the vertex range [0, {order})")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the dense vertex range ``0..order-1``.

    ``labels`` keeps the names of a parsed input for output; ``origin`` maps
    the vertices of an induced subgraph back to the graph it was cut from.
    Both are ignored by equality.
    """

    order: int
    edges: frozenset[Edge] = frozenset()
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    origin: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise StructuralError("negative vertex count")
        object.__setattr__(self, "edges", _normalize_edges(self.order, self.edges))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.order:
                raise StructuralError("label table does not match the vertex count")
            if len(set(labels)) != len(labels):
                raise StructuralError("vertex labels must be unique")
            object.__setattr__(self, "labels", labels)
        if self.origin is not None and len(self.origin) != self.order:
            raise StructuralError("origin table does not match the vertex count")

    # -- constructors -------------------------------------------------------

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def edgeless(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise StructuralError("a cycle needs at least 3 vertices")
        return cls(n, frozenset((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def wheel(cls, rim: int) -> Graph:
        """Hub 0 joined to the cycle 1..rim."""
        rim_edges = {(i, i % rim + 1) for i in range(1, rim + 1)}
        return cls(rim + 1, frozenset(rim_edges | {(0, i) for i in range(1, rim + 1)}))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), frozenset((index[u], index[v]) for u, v in g.edges()))

    # -- queries ------------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.order)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.order
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def neighbors(self, v: int) -> VertexSet:
        return from_mask(self.adjacency[v])

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def non_edges(self) -> list[Edge]:
        return [
            (u, v)
            for u in range(self.order)
            for v in range(u + 1, self.order)
            if not self.has_edge(u, v)
        ]

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])

    def check_vertices(self, vertices: Iterable[int], what: str = "vertex set") -> VertexSet:
        out = frozenset(int(v) for v in vertices)
        bad = [v for v in out if not 0 <= v < self.order]
        if bad:
            raise StructuralError(f"{what} references vertex {min(bad)} outside [0, {self.order})")
        return out

    @cached_property
    def _nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.sorted_edges)
        return g

    def to_networkx(self) -> nx.Graph:
        """Shared read-only networkx view; copy before mutating."""
        return self._nx

    # -- derived graphs -----------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(self.check_vertices(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        labels = tuple(self.label(v) for v in keep) if self.labels is not None else None
        return Graph(len(keep), edges, labels=labels, origin=tuple(keep))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.order, self.edges | {(min(u, v), max(u, v))}, labels=self.labels)

    def delete_edge(self, u: int, v: int) -> Graph:
        return Graph(self.order, self.edges - {(min(u, v), max(u, v))}, labels=self.labels)

    def delete_vertex(self, v: int) -> Graph:
        return self.induced(w for w in self.vertices if w != v)

    def contract_edge(self, u: int, v: int) -> Graph:
        """Merge the larger endpoint into the smaller one; indices above it shift down."""
        if not self.has_edge(u, v):
            raise StructuralError(f"{u}-{v} is not an edge")
        keep, gone = min(u, v), max(u, v)

        def shift(x: int) -> int:
            x = keep if x == gone else x
            return x - 1 if x > gone else x

        edges = {
            (shift(a), shift(b)) for a, b in self.edges if {a, b} != {keep, gone}
        }
        return Graph(self.order - 1, frozenset(e for e in edges if e[0] != e[1]))

    def relabel(self, permutation: list[int] | tuple[int, ...]) -> Graph:
        """Vertex ``v`` becomes ``permutation[v]``."""
        if sorted(permutation) != list(range(self.order)):
            raise StructuralError("relabeling is not a permutation of the vertex range")
        return Graph(
            self.order,
            frozenset((permutation[u], permutation[v]) for u, v in self.edges),
        )

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.sorted_edges)})"


@dataclass(frozen=True)
class MinorModel:
    pattern: Graph
    host: Graph
    branch_sets: tuple[VertexSet, ...]
