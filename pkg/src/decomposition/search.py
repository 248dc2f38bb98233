from __future__ import annotations

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from ..bramble.model import StrictBramble, bramble_order, validate_bramble
from ..bramble.oracle import find_bramble
from ..config import SETTINGS, resolve_guard
from ..errors import DomainError, InternalCheckError, check_guard
from ..graph.model import Graph, from_mask, iter_bits, to_mask
from ..graph.primitives import mask_components, neighborhood
from .model import LenientTreeDecomposition, validate_ltd

logger = logging.getLogger(__name__)

# (child bag, vertices handed to the child subtree)
Plan = tuple[int, int]
_FAILED = -1


class _WidthSearch:
    """Exhaustive search for a rooted decomposition with bags of exactly ``k``
    vertices.

    ``solve(X, R)`` asks whether the vertices ``R`` (all outside the bag ``X``)
    can hang below a node with bag ``X``. The lowest component of ``G[R]`` is
    given to a new child bag ``Y``; ``Y`` takes along every component of
    ``G[R]`` it meets and, optionally, components whose neighbours in ``X``
    all lie in ``Y``. Results are memoized on ``(X, R)``.
    """

    def __init__(self, graph: Graph, k: int) -> None:
        self.graph = graph
        self.k = k
        self._memo: dict[tuple[int, int], Plan | int | None] = {}
        self._lock = threading.Lock()

    def _remember(self, key: tuple[int, int], value: Plan | int | None) -> None:
        with self._lock:
            self._memo[key] = value

    def solve(self, bag: int, rest: int) -> bool:
        key = (bag, rest)
        with self._lock:
            if key in self._memo:
                return self._memo[key] != _FAILED
        if not rest:
            self._remember(key, None)
            return True

        graph = self.graph
        comps = mask_components(graph, rest)
        first = comps[0]
        pool = sorted(iter_bits(bag | rest))
        for chosen in combinations(pool, self.k):
            child = to_mask(chosen)
            if not child & rest:
                continue
            handed = first
            for comp in comps[1:]:
                if comp & child:
                    handed |= comp
            outside = bag & ~child
            if neighborhood(graph, handed & ~child) & outside:
                continue
            optional = [
                comp
                for comp in comps
                if not comp & handed and not neighborhood(graph, comp) & outside
            ]
            for extra in _subset_unions(optional):
                given = handed | extra
                if self.solve(child, given & ~child) and self.solve(bag, rest & ~given):
                    self._remember(key, (child, given))
                    return True
        self._remember(key, _FAILED)
        return False

    def build(self, bag: int, rest: int) -> tuple[list[int], list[tuple[int, int]]]:
        """Bags and tree edges realizing a successful ``solve(bag, rest)``;
        node 0 carries ``bag``."""
        bags = [bag]
        edges: list[tuple[int, int]] = []
        self._attach(0, bag, rest, bags, edges)
        return bags, edges

    def _attach(
        self, node: int, bag: int, rest: int, bags: list[int], edges: list[tuple[int, int]]
    ) -> None:
        while rest:
            plan = self._memo.get((bag, rest))
            if not isinstance(plan, tuple):
                raise InternalCheckError("width search lost a successful plan")
            child, given = plan
            child_node = len(bags)
            bags.append(child)
            edges.append((node, child_node))
            self._attach(child_node, child, given & ~child, bags, edges)
            rest &= ~given


def _subset_unions(masks: list[int]):
    """Unions over all subsets of ``masks``, the empty union first."""
    for size in range(len(masks) + 1):
        for group in combinations(masks, size):
            out = 0
            for m in group:
                out |= m
            yield out


def _component_decomposition(
    search: _WidthSearch, component: int, threads: int
) -> tuple[list[int], list[tuple[int, int]]] | None:
    graph, k = search.graph, search.k
    if component.bit_count() <= k:
        return [component], []
    if k == 0:
        return None
    low = component & -component
    others = sorted(iter_bits(component & ~low))
    roots = [low | to_mask(c) for c in combinations(others, k - 1)]

    def attempt(root: int) -> bool:
        return search.solve(root, component & ~root)

    chosen: int | None = None
    if threads > 1 and len(roots) > 1:
        with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="width") as pool:
            for root, ok in zip(roots, pool.map(attempt, roots)):
                if ok:
                    chosen = root
                    break
    else:
        chosen = next((r for r in roots if attempt(r)), None)
    if chosen is None:
        return None
    logger.debug("width %d: component %s rooted at %s", k, sorted(from_mask(component)), sorted(from_mask(chosen)))
    return search.build(chosen, component & ~chosen)


def decide_width_le_k(
    graph: Graph,
    k: int,
    *,
    guard: int | None = None,
    threads: int | None = None,
) -> LenientTreeDecomposition | None:
    """A lenient tree decomposition of width at most ``k``, or ``None`` when
    the exhaustive search proves there is none.

    Width is the largest bag size (not minus one). Each component with more
    than ``k`` vertices is decomposed with bags of exactly ``k`` vertices, which
    loses nothing because every decomposition can be made extreme."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    check_guard("decide_width_le_k", graph.order, resolve_guard(guard, SETTINGS.search_guard))
    workers = max(1, threads if threads is not None else SETTINGS.worker_threads)

    if graph.order == 0:
        return LenientTreeDecomposition.from_parts(graph, [()])

    search = _WidthSearch(graph, k)
    bags: list[int] = []
    edges: list[tuple[int, int]] = []
    for component in mask_components(graph, graph.full_mask):
        part = _component_decomposition(search, component, workers)
        if part is None:
            logger.debug("width %d refuted on component %s", k, sorted(from_mask(component)))
            return None
        part_bags, part_edges = part
        offset = len(bags)
        if offset:
            edges.append((0, offset))
        bags.extend(part_bags)
        edges.extend((a + offset, b + offset) for a, b in part_edges)

    out = LenientTreeDecomposition.from_parts(graph, [from_mask(b) for b in bags], edges)
    verdict = validate_ltd(out)
    if not verdict.ok:
        raise InternalCheckError(f"width search produced an invalid decomposition: {verdict.detail}")
    if out.width > k:
        raise InternalCheckError(f"width search produced width {out.width} > {k}")
    return out


@dataclass(frozen=True)
class SbnCertificate:
    """Matching lower and upper witnesses for ``sbn(G) = value``."""

    value: int
    bramble: StrictBramble
    decomposition: LenientTreeDecomposition

    def check(self) -> None:
        verdict = validate_bramble(self.bramble)
        if not verdict.ok:
            raise InternalCheckError(f"lower witness is not a strict bramble: {verdict.detail}")
        if bramble_order(self.bramble)[0] != self.value:
            raise InternalCheckError("lower witness order differs from the value")
        verdict = validate_ltd(self.decomposition)
        if not verdict.ok:
            raise InternalCheckError(f"upper witness is invalid: {verdict.detail}")
        if self.decomposition.width != self.value:
            raise InternalCheckError("upper witness width differs from the value")


def sbn_exact(
    graph: Graph,
    *,
    guard: int | None = None,
    oracle_guard: int | None = None,
    threads: int | None = None,
) -> SbnCertificate:
    """Strict bramble number with a bramble and a decomposition that agree."""
    check_guard("sbn_exact", graph.order, resolve_guard(guard, SETTINGS.search_guard))
    check_guard("sbn_exact bramble", graph.order, resolve_guard(oracle_guard, SETTINGS.oracle_guard))
    value = 0 if graph.order == 0 else 1
    while True:
        decomposition = decide_width_le_k(graph, value, guard=guard, threads=threads)
        if decomposition is not None:
            break
        value += 1

    bramble = find_bramble(graph, value, guard=oracle_guard)
    if bramble is None:
        raise InternalCheckError(f"no strict bramble of order {value} although width {value - 1} fails")
    certificate = SbnCertificate(value=value, bramble=bramble, decomposition=decomposition)
    certificate.check()
    logger.info("sbn = %d on %d vertices", value, graph.order)
    return certificate
