from .builtins import (
    H1_GRAPH6,
    H2_GRAPH6,
    W4_GRAPH6,
    builtin_obstructions,
    excludes_Z,
    obstruction_graphs,
)
from .records import MinorCheck, ObstructionRecord, minimality_log
from .search import is_minor_minimal, obstruction_search

__all__ = [
    "H1_GRAPH6",
    "H2_GRAPH6",
    "W4_GRAPH6",
    "MinorCheck",
    "ObstructionRecord",
    "builtin_obstructions",
    "excludes_Z",
    "is_minor_minimal",
    "minimality_log",
    "obstruction_graphs",
    "obstruction_search",
]
