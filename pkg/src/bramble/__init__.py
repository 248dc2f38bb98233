from .model import (
    STRICT,
    TOUCHING,
    StrictBramble,
    bramble_order,
    check_cover_separator,
    covers,
    validate_bramble,
)
from .oracle import OracleResult, find_bramble, sbn_oracle

__all__ = [
    "STRICT",
    "TOUCHING",
    "OracleResult",
    "StrictBramble",
    "bramble_order",
    "check_cover_separator",
    "covers",
    "find_bramble",
    "sbn_oracle",
    "validate_bramble",
]
