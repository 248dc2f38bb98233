from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

from ..bramble.oracle import find_bramble
from ..config import SETTINGS
from ..decomposition.search import decide_width_le_k
from ..errors import InternalCheckError
from ..graph.canonical import canonical_code, enumerate_graphs
from ..graph.minors import one_step_minors
from ..graph.model import Graph
from ..graph.primitives import is_biconnected, mask_is_connected
from ..storage import Decision, DecisionStore, open_decision_store
from ..verdict import Verdict
from .records import ObstructionRecord, minimality_log

logger = logging.getLogger(__name__)


class _Membership:
    """``sbn(G) <= k`` decisions keyed by canonical code."""

    def __init__(self, k: int, store: DecisionStore, guard: int | None) -> None:
        self.k = k
        self.store = store
        self.guard = guard

    def fits(self, graph: Graph) -> bool:
        code = canonical_code(graph)
        cached = self.store.get(code, self.k)
        if cached is not None:
            return cached.fits
        fits = decide_width_le_k(graph, self.k, guard=self.guard) is not None
        self.store.put(Decision(code=code, k=self.k, fits=fits))
        return fits


def is_minor_minimal(graph: Graph, k: int, *, guard: int | None = None) -> Verdict:
    """Valid iff ``sbn(G) > k`` while every one-step minor has ``sbn <= k``;
    the witness of a valid verdict is the minimality log."""
    if decide_width_le_k(graph, k, guard=guard) is not None:
        return Verdict.invalid("member", detail=f"graph already has a width-{k} decomposition")
    log = minimality_log(graph, k, guard=guard, stop_on_failure=True)
    for entry in log:
        if not entry.fits:
            return Verdict.invalid("minor", witness=entry.step, detail=f"{entry.step} still needs width above {k}")
    return Verdict(status="valid", witness=tuple(log))


def _candidate(graph: Graph, k: int) -> bool:
    if not mask_is_connected(graph, graph.full_mask):
        return False
    # every obstruction for width two is 2-connected
    return k != 2 or is_biconnected(graph)


def _examine(graph: Graph, membership: _Membership) -> ObstructionRecord | None:
    k = membership.k
    if membership.fits(graph):
        return None
    if not all(membership.fits(step.graph) for step in one_step_minors(graph)):
        return None
    bramble = find_bramble(graph, k + 1)
    if bramble is None:
        raise InternalCheckError(f"no bramble of order {k + 1} on a graph without a width-{k} decomposition")
    record = ObstructionRecord(
        graph=graph,
        k=k,
        bramble=bramble,
        minimality_log=tuple(minimality_log(graph, k, guard=membership.guard)),
    )
    verdict = record.check()
    if not verdict.ok:
        raise InternalCheckError(f"obstruction record fails its own check: {verdict.detail}")
    return record


def obstruction_search(
    k: int,
    n_max: int,
    *,
    guard: int | None = None,
    threads: int | None = None,
    store: DecisionStore | None = None,
) -> list[ObstructionRecord]:
    """All minor-minimal graphs with ``sbn > k`` on at most ``n_max`` vertices,
    one per isomorphism class, ordered by size then canonical code."""
    if store is None:
        store = open_decision_store()
    membership = _Membership(k, store, guard)
    workers = max(1, threads if threads is not None else SETTINGS.worker_threads)
    found: list[ObstructionRecord] = []
    for n in range(1, n_max + 1):
        candidates = [g for g in enumerate_graphs(n) if _candidate(g, k)]
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="obstructions") as pool:
                results = list(pool.map(lambda g: _examine(g, membership), candidates))
        else:
            results = [_examine(g, membership) for g in candidates]
        level = [r for r in results if r is not None]
        logger.info("obstruction_search(k=%d): %d candidates on %d vertices, %d obstructions", k, len(candidates), n, len(level))
        found.extend(level)
    found.sort(key=lambda r: (r.graph.order, canonical_code(r.graph)))
    return found
