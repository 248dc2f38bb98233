from .amalgamation import amalgamated_restriction, completion, s_amalgamation
from .extreme import extremize, is_extreme
from .lemmas import (
    amalgamation_width_holds,
    bag_linkage_holds,
    clique_lemma_holds,
    completion_separator_bijection,
    convexity_lemma_holds,
    separator_lemma_holds,
)
from .ltp import LtpWitness, ltp_witness
from .model import (
    CLASSIC,
    LENIENT,
    ClassicTreeDecomposition,
    LenientTreeDecomposition,
    classic_to_lenient,
    ltd_width,
    petal,
    trace,
    trivial_ltd,
    validate_classic,
    validate_ltd,
)
from .search import SbnCertificate, decide_width_le_k, sbn_exact

__all__ = [
    "CLASSIC",
    "LENIENT",
    "ClassicTreeDecomposition",
    "LenientTreeDecomposition",
    "LtpWitness",
    "SbnCertificate",
    "amalgamated_restriction",
    "amalgamation_width_holds",
    "bag_linkage_holds",
    "classic_to_lenient",
    "clique_lemma_holds",
    "completion",
    "completion_separator_bijection",
    "convexity_lemma_holds",
    "decide_width_le_k",
    "extremize",
    "is_extreme",
    "ltd_width",
    "ltp_witness",
    "petal",
    "s_amalgamation",
    "sbn_exact",
    "separator_lemma_holds",
    "trace",
    "trivial_ltd",
    "validate_classic",
    "validate_ltd",
]
