"""The three minor-minimal graphs with strict bramble number three.

The constants were regenerated by ``obstruction_search(2, 6)``; the test
suite keeps them in sync. Each bramble below is listed over the vertex
numbering of its graph6 string.

  W4  the wheel: hub 0, rim 1-2-3-4-1; every 3-subset of the vertices.
  H1  the 3-sun: triangle 0-1-4 with ears 3 (on 0-1), 2 (on 1-4), 5 (on 0-4).
  H2  K4 minus two adjacent edges (on 0, 1, 3 plus 5 joined to 3) with the
      degree-2 vertices 2 and 4 re-linking 0-5 and 1-5.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..bramble.model import StrictBramble
from ..errors import InternalCheckError
from ..graph.io import from_graph6
from ..graph.minors import is_minor
from ..graph.model import Graph
from .records import ObstructionRecord, minimality_log

W4_GRAPH6 = "D|s"
H1_GRAPH6 = "EmyG"
H2_GRAPH6 = "EuOw"

W4_BRAMBLE = tuple(combinations(range(5), 3))
H1_BRAMBLE = ((0, 1, 2), (2, 4, 5), (0, 3, 5), (1, 3, 4), (1, 2, 3), (0, 1, 4), (0, 3, 4))
H2_BRAMBLE = ((0, 1, 2), (0, 1, 4), (0, 2, 3), (1, 3, 4), (0, 3, 5), (1, 3, 5), (2, 4, 5))

_TABLE = (
    ("W4", W4_GRAPH6, W4_BRAMBLE),
    ("H1", H1_GRAPH6, H1_BRAMBLE),
    ("H2", H2_GRAPH6, H2_BRAMBLE),
)


def obstruction_graphs() -> dict[str, Graph]:
    return {name: from_graph6(code) for name, code, _ in _TABLE}


@lru_cache(maxsize=1)
def builtin_obstructions() -> tuple[ObstructionRecord, ...]:
    records = []
    for name, code, sets in _TABLE:
        graph = from_graph6(code)
        record = ObstructionRecord(
            graph=graph,
            k=2,
            bramble=StrictBramble.of(graph, sets),
            minimality_log=tuple(minimality_log(graph, 2)),
            name=name,
        )
        verdict = record.check()
        if not verdict.ok:
            raise InternalCheckError(f"built-in obstruction {name} fails: {verdict.detail}")
        records.append(record)
    return tuple(records)


def excludes_Z(graph: Graph, *, guard: int | None = None) -> bool:
    """True iff none of W4, H1, H2 is a minor of ``graph``."""
    return not any(is_minor(graph, pattern, guard=guard) for pattern in obstruction_graphs().values())
