from __future__ import annotations

import logging

from ..decomposition.amalgamation import completion
from ..decomposition.extreme import extremize
from ..decomposition.search import decide_width_le_k
from ..errors import InternalCheckError, PreconditionError
from ..graph.model import Graph
from .recognizer import recognize_domino

logger = logging.getLogger(__name__)


def domino_completion(
    graph: Graph, k: int, *, guard: int | None = None, threads: int | None = None
) -> Graph | None:
    """A k-domino-tree on the same vertices containing ``graph``, or ``None``
    when ``sbn(graph) > k``.

    The completion of an extreme decomposition is saturated: every non-edge
    that keeps the width at most k is added. A non-edge rejected once stays
    rejected in every supergraph."""
    found = decide_width_le_k(graph, k, guard=guard, threads=threads)
    if found is None:
        return None
    plus = completion(extremize(found, width=min(k, graph.order)))
    for u, v in plus.non_edges():
        wider = plus.add_edge(u, v)
        if decide_width_le_k(wider, k, guard=guard, threads=threads) is not None:
            logger.debug("saturating completion with %d-%d", u, v)
            plus = wider
    if not graph.edges <= plus.edges:
        raise InternalCheckError("completion dropped an edge of the input")
    report = recognize_domino(plus, k)
    if not report.verdict:
        raise InternalCheckError(
            f"completion is not a {k}-domino-tree (fails {', '.join(report.failed())})"
        )
    return plus


def is_edge_maximal(
    graph: Graph, k: int, *, guard: int | None = None, threads: int | None = None
) -> bool:
    """True iff every added edge pushes the strict bramble number above k.

    The answer is cross-checked against the domino-tree recognizer."""
    if decide_width_le_k(graph, k, guard=guard, threads=threads) is None:
        raise PreconditionError(f"graph already has strict bramble number above {k}")
    maximal = True
    for u, v in graph.non_edges():
        if decide_width_le_k(graph.add_edge(u, v), k, guard=guard, threads=threads) is not None:
            logger.debug("adding %d-%d keeps width %d", u, v, k)
            maximal = False
            break
    recognized = recognize_domino(graph, k).verdict
    if recognized != maximal:
        raise InternalCheckError(
            f"edge-maximality ({maximal}) disagrees with the {k}-domino-tree recognizer ({recognized})"
        )
    return maximal
