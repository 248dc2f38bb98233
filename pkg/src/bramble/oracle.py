from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

import networkx as nx

from ..config import SETTINGS, resolve_guard
from ..errors import GuardExceeded, InternalCheckError, check_guard
from ..graph.model import Graph, from_mask
from ..graph.primitives import connected_masks
from .hitting_set import minimum_cover
from .model import STRICT, StrictBramble, bramble_order, compatible, validate_bramble

logger = logging.getLogger(__name__)

_BATCH = 512


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: StrictBramble
    families_scanned: int


def _maximal_families(graph: Graph, mode: str, cap: int) -> Iterator[list[int]]:
    """Maximal pairwise-compatible families of connected sets."""
    sets = connected_masks(graph)
    compat = nx.Graph()
    compat.add_nodes_from(range(len(sets)))
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if compatible(graph, sets[i], sets[j], mode):
                compat.add_edge(i, j)
    for count, clique in enumerate(nx.find_cliques(compat), start=1):
        if count > cap:
            raise GuardExceeded("maximal bramble enumeration", count, cap)
        yield [sets[i] for i in sorted(clique)]


def _family_key(family: list[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(from_mask(m))) for m in family))


def _best_of(batch: list[list[int]], floor: int) -> tuple[int, tuple, list[int]] | None:
    """Highest-order family in the batch (least key on ties) reaching ``floor``."""
    best: tuple[int, tuple, list[int]] | None = None
    for family in batch:
        bar = floor if best is None else best[0]
        # skip families that provably cannot reach the bar
        if bar > 0 and minimum_cover(family, limit=bar - 1) is not None:
            continue
        order = minimum_cover(family)[0]  # type: ignore[index]
        key = _family_key(family)
        if best is None or order > best[0] or (order == best[0] and key < best[1]):
            best = (order, key, family)
    return best


def sbn_oracle(
    graph: Graph,
    mode: str = STRICT,
    *,
    guard: int | None = None,
    threads: int | None = None,
    clique_cap: int | None = None,
) -> OracleResult:
    """Brute-force (strict) bramble number: the maximum hitting-set minimum
    over all maximal brambles of the given mode."""
    check_guard("sbn_oracle", graph.order, resolve_guard(guard, SETTINGS.oracle_guard))
    cap = clique_cap if clique_cap is not None else SETTINGS.clique_cap
    if graph.order == 0:
        empty = StrictBramble(base=graph, sets=(), mode=mode)
        return OracleResult(value=0, witness=empty, families_scanned=0)

    workers = max(1, threads if threads is not None else SETTINGS.worker_threads)
    families = _maximal_families(graph, mode, cap)
    best: tuple[int, tuple, list[int]] | None = None
    scanned = 0

    def merge(candidate: tuple[int, tuple, list[int]] | None) -> None:
        nonlocal best
        if candidate is None:
            return
        if best is None or candidate[0] > best[0] or (candidate[0] == best[0] and candidate[1] < best[1]):
            best = candidate

    if workers == 1:
        while batch := list(islice(families, _BATCH)):
            scanned += len(batch)
            merge(_best_of(batch, best[0] if best else 0))
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="oracle") as pool:
            while True:
                batches = [list(islice(families, _BATCH)) for _ in range(workers)]
                batches = [b for b in batches if b]
                if not batches:
                    break
                scanned += sum(len(b) for b in batches)
                floor = best[0] if best else 0
                for result in pool.map(lambda b: _best_of(b, floor), batches):
                    merge(result)

    if best is None:
        raise InternalCheckError("no maximal bramble found on a nonempty graph")
    witness = StrictBramble(base=graph, sets=tuple(from_mask(m) for m in best[2]), mode=mode)
    _check_witness(witness, best[0])
    logger.debug("sbn_oracle(%s): value %d after %d families", mode, best[0], scanned)
    return OracleResult(value=best[0], witness=witness, families_scanned=scanned)


def find_bramble(
    graph: Graph,
    order: int,
    mode: str = STRICT,
    *,
    guard: int | None = None,
    clique_cap: int | None = None,
) -> StrictBramble | None:
    """A bramble of exactly the given order, or ``None`` when none exists.

    The first maximal family reaching the order is thinned one set at a time;
    dropping a set lowers the order by at most one."""
    check_guard("find_bramble", graph.order, resolve_guard(guard, SETTINGS.oracle_guard))
    if order <= 0:
        return StrictBramble(base=graph, sets=(), mode=mode)
    cap = clique_cap if clique_cap is not None else SETTINGS.clique_cap
    for family in _maximal_families(graph, mode, cap):
        if minimum_cover(family, limit=order - 1) is not None:
            continue
        family = sorted(family, key=lambda m: (m.bit_count(), m))
        current = minimum_cover(family)[0]  # type: ignore[index]
        while current > order:
            family.pop()
            current = minimum_cover(family)[0]  # type: ignore[index]
        witness = StrictBramble(base=graph, sets=tuple(from_mask(m) for m in family), mode=mode)
        _check_witness(witness, order)
        return witness
    return None


def _check_witness(witness: StrictBramble, expected: int) -> None:
    verdict = validate_bramble(witness)
    if not verdict.ok:
        raise InternalCheckError(f"oracle produced an invalid bramble: {verdict.detail}")
    if bramble_order(witness)[0] != expected:
        raise InternalCheckError("oracle witness does not reach the reported order")
