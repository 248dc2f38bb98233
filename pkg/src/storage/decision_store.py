from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from typing import Protocol


@dataclass
class Decision:
    """Cached answer to "does the graph with this canonical code have a
    lenient decomposition of width at most k"."""

    code: str
    k: int
    fits: bool
    computed_at: float = 0.0

    def touch(self) -> None:
        self.computed_at = time.time()


class DecisionStore(Protocol):
    def get(self, code: str, k: int) -> Decision | None: ...

    def put(self, decision: Decision) -> None: ...

    def clear(self) -> None: ...


class InMemoryDecisionStore:
    def __init__(self) -> None:
        self._store: dict[tuple[str, int], Decision] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, code: str, k: int) -> Decision | None:
        with self._lock:
            item = self._store.get((code, k))
            if item is None:
                self.misses += 1
            else:
                self.hits += 1
            return item

    def put(self, decision: Decision) -> None:
        decision.touch()
        with self._lock:
            self._store[(decision.code, decision.k)] = decision

    def clear(self) -> None:
        with self._lock:
            self._store.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)
