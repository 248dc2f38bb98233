from __future__ import annotations

from dataclasses import dataclass

from ..errors import InternalCheckError, PreconditionError
from ..graph.minors import verify_minor_model
from ..graph.model import Graph, MinorModel
from ..graph.primitives import lexicographic_product
from .extreme import is_extreme
from .model import LenientTreeDecomposition, trace


@dataclass(frozen=True)
class LtpWitness:
    """``G`` is a minor of ``tree . K_k`` through ``model``."""

    tree: Graph
    k: int
    model: MinorModel


def ltp_witness(decomposition: LenientTreeDecomposition) -> LtpWitness:
    verdict = is_extreme(decomposition)
    if not verdict.ok:
        raise PreconditionError(f"ltp_witness needs an extreme decomposition: {verdict.detail}")
    k = decomposition.width
    if k == 0:
        raise PreconditionError("the empty graph has no product witness")

    # vertex v takes copy slot_t(v) of K_k at every node t of its trace
    slots = [{v: i for i, v in enumerate(sorted(bag))} for bag in decomposition.bags]
    branch_sets = tuple(
        frozenset(t * k + slots[t][v] for t in sorted(trace(decomposition, v)))
        for v in decomposition.base.vertices
    )
    host = lexicographic_product(decomposition.tree, Graph.complete(k))
    model = MinorModel(pattern=decomposition.base, host=host, branch_sets=branch_sets)
    if not verify_minor_model(model):
        raise InternalCheckError("trace model is not a minor model of the product")
    return LtpWitness(tree=decomposition.tree, k=k, model=model)
