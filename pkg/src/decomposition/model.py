from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import ClassVar, Iterable, Iterator, Sequence

from ..errors import DomainError, StructuralError
from ..graph.model import Graph, VertexSet, from_mask, to_mask
from ..graph.primitives import mask_components, mask_is_connected, neighborhood
from ..verdict import Verdict

LENIENT = "lenient"
CLASSIC = "classic"


@dataclass(frozen=True)
class TreeDecomposition:
    base: Graph
    tree: Graph
    bags: tuple[VertexSet, ...]

    kind: ClassVar[str] = LENIENT

    @classmethod
    def from_parts(
        cls,
        base: Graph,
        bags: Sequence[Iterable[int]],
        tree_edges: Iterable[tuple[int, int]] = (),
    ):
        try:
            tree = Graph(len(bags), frozenset(tuple(e) for e in tree_edges))
        except StructuralError as exc:
            raise StructuralError(f"tree edge references a node without a bag: {exc}") from exc
        return cls(base=base, tree=tree, bags=tuple(frozenset(b) for b in bags))

    @property
    def nodes(self) -> range:
        return self.tree.vertices

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def trace_mask(self, v: int) -> int:
        return to_mask(t for t, bag in enumerate(self.bags) if v in bag)

    def close_pairs(self) -> Iterator[tuple[int, int]]:
        for t in self.nodes:
            yield t, t
        yield from self.tree.sorted_edges

    def leaves(self) -> list[int]:
        return [t for t in self.nodes if self.tree.degree(t) == 1]


class LenientTreeDecomposition(TreeDecomposition):
    """Width is the largest bag size (no minus one)."""

    kind: ClassVar[str] = LENIENT


class ClassicTreeDecomposition(TreeDecomposition):
    kind: ClassVar[str] = CLASSIC

    @property
    def classic_width(self) -> int:
        return self.width - 1


def _check_structure(decomposition: TreeDecomposition) -> None:
    if decomposition.tree.order != len(decomposition.bags):
        raise StructuralError(
            f"{len(decomposition.bags)} bags for a tree on {decomposition.tree.order} nodes"
        )
    if decomposition.tree.order == 0:
        raise StructuralError("a decomposition needs at least one tree node")
    for t, bag in enumerate(decomposition.bags):
        decomposition.base.check_vertices(bag, f"bag of node {t}")


def _check_tree(tree: Graph) -> Verdict | None:
    if tree.size != tree.order - 1 or not mask_is_connected(tree, tree.full_mask):
        return Verdict.invalid("tree", detail="the decomposition tree is not a tree")
    return None


def _check_cover_and_traces(decomposition: TreeDecomposition) -> Verdict | None:
    base, tree = decomposition.base, decomposition.tree
    covered = 0
    for bag in decomposition.bags:
        covered |= to_mask(bag)
    missing = base.full_mask & ~covered
    if missing:
        v = (missing & -missing).bit_length() - 1
        return Verdict.invalid("C1", witness=v, detail=f"vertex {v} is in no bag")
    for v in base.vertices:
        if not mask_is_connected(tree, decomposition.trace_mask(v)):
            return Verdict.invalid(
                "C3",
                witness=v,
                detail=f"trace of vertex {v} is disconnected: {sorted(from_mask(decomposition.trace_mask(v)))}",
            )
    return None


def validate_ltd(decomposition: TreeDecomposition) -> Verdict:
    _check_structure(decomposition)
    failure = _check_tree(decomposition.tree)
    if failure is not None:
        return failure
    base, tree = decomposition.base, decomposition.tree
    failure = _check_cover_and_traces(decomposition)
    if failure is not None and failure.clause == "C1":
        return failure
    for u, v in base.sorted_edges:
        tu, tv = decomposition.trace_mask(u), decomposition.trace_mask(v)
        if not (tu & tv or neighborhood(tree, tu) & tv):
            return Verdict.invalid(
                "C2", witness=(u, v), detail=f"edge {u}-{v} lies in no union of two close bags"
            )
    return failure if failure is not None else Verdict.valid()


def validate_classic(decomposition: TreeDecomposition) -> Verdict:
    _check_structure(decomposition)
    failure = _check_tree(decomposition.tree)
    if failure is not None:
        return failure
    failure = _check_cover_and_traces(decomposition)
    if failure is not None and failure.clause == "C1":
        return failure
    for u, v in decomposition.base.sorted_edges:
        if not decomposition.trace_mask(u) & decomposition.trace_mask(v):
            return Verdict.invalid("C2'", witness=(u, v), detail=f"edge {u}-{v} lies in no bag")
    return failure if failure is not None else Verdict.valid()


def ltd_width(decomposition: TreeDecomposition) -> int:
    return decomposition.width


def trace(decomposition: TreeDecomposition, v: int) -> frozenset[int]:
    return from_mask(decomposition.trace_mask(v))


def petal(decomposition: TreeDecomposition, leaf: int) -> VertexSet:
    tree = decomposition.tree
    if tree.order < 2:
        raise DomainError("petal is undefined on a one-node tree")
    if tree.degree(leaf) != 1:
        raise DomainError(f"node {leaf} is not a leaf")
    (neighbor,) = tree.neighbors(leaf)
    return decomposition.bags[leaf] - decomposition.bags[neighbor]


def tree_path(tree: Graph, start: int, end: int) -> list[int]:
    parent = {start: start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        if t == end:
            break
        for w in sorted(tree.neighbors(t)):
            if w not in parent:
                parent[w] = t
                queue.append(w)
    if end not in parent:
        raise StructuralError(f"tree nodes {start} and {end} are not connected")
    path = [end]
    while path[-1] != start:
        path.append(parent[path[-1]])
    return path[::-1]


def branches(tree: Graph, node: int) -> list[int]:
    """Node masks of the components of ``T - node``."""
    return mask_components(tree, tree.full_mask & ~(1 << node))


def trivial_ltd(graph: Graph) -> LenientTreeDecomposition:
    return LenientTreeDecomposition(base=graph, tree=Graph(1), bags=(frozenset(graph.vertices),))


def classic_to_lenient(decomposition: ClassicTreeDecomposition) -> LenientTreeDecomposition:
    return LenientTreeDecomposition(
        base=decomposition.base, tree=decomposition.tree, bags=decomposition.bags
    )


def relabel_nodes(
    base: Graph, bags: dict[int, VertexSet], edges: Iterable[tuple[int, int]]
) -> LenientTreeDecomposition:
    """Compact arbitrary node ids to ``0..m-1`` keeping their relative order."""
    index = {t: i for i, t in enumerate(sorted(bags))}
    return LenientTreeDecomposition(
        base=base,
        tree=Graph(len(index), frozenset((index[a], index[b]) for a, b in edges)),
        bags=tuple(bags[t] for t in sorted(bags)),
    )
