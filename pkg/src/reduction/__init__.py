from .gadget import (
    GadgetMap,
    GadgetVertex,
    adjacency_bag_lemma_check,
    forward_gadget_decomposition,
    gadget,
    verify_reduction,
)
from .treewidth import treewidth_exact

__all__ = [
    "GadgetMap",
    "GadgetVertex",
    "adjacency_bag_lemma_check",
    "forward_gadget_decomposition",
    "gadget",
    "treewidth_exact",
    "verify_reduction",
]
