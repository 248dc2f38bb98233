from .extremal import domino_completion, is_edge_maximal
from .generators import edge_gap_bound, fan_edge_count, gen_chain, gen_fan, max_edge_bound
from .recognizer import PROPERTY_IDS, DominoReport, PropertyCheck, recognize_domino, refine_separator

__all__ = [
    "PROPERTY_IDS",
    "DominoReport",
    "PropertyCheck",
    "domino_completion",
    "edge_gap_bound",
    "fan_edge_count",
    "gen_chain",
    "gen_fan",
    "is_edge_maximal",
    "max_edge_bound",
    "recognize_domino",
    "refine_separator",
]
