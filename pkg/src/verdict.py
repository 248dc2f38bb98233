from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    status: str  # "valid" | "invalid"
    clause: str | None = None
    witness: Any = None
    detail: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "valid"

    @classmethod
    def valid(cls) -> Verdict:
        return cls(status="valid")

    @classmethod
    def invalid(cls, clause: str, witness: Any = None, detail: str | None = None) -> Verdict:
        return cls(status="invalid", clause=clause, witness=witness, detail=detail)
