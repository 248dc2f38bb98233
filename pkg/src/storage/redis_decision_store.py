from __future__ import annotations

import json
import logging
from dataclasses import asdict
from typing import Any

try:
    import redis  # type: ignore
except Exception:  # noqa: BLE001
    redis = None  # type: ignore

from .decision_store import Decision

logger = logging.getLogger(__name__)


def create_redis_client(redis_url: str, *, timeout_seconds: float = 5.0):
    if not redis_url:
        return None
    if redis is None:
        raise RuntimeError("redis package is not installed")

    return redis.Redis.from_url(
        redis_url,
        decode_responses=True,
        socket_connect_timeout=timeout_seconds,
        socket_timeout=timeout_seconds,
    )


class RedisDecisionStore:
    def __init__(
        self,
        *,
        redis_client: Any,
        ttl_seconds: int,
        key_prefix: str = "sbn",
    ) -> None:
        self._ttl_seconds = max(60, int(ttl_seconds))
        self._redis = redis_client
        self._prefix = (key_prefix or "sbn").strip() or "sbn"

    def _key(self, code: str, k: int) -> str:
        return f"{self._prefix}:decision:{k}:{code}"

    def get(self, code: str, k: int) -> Decision | None:
        raw = self._redis.get(self._key(code, k))
        if not raw:
            return None

        try:
            data = json.loads(raw)
        except Exception:  # noqa: BLE001
            logger.warning("Invalid decision JSON in Redis for code=%s k=%d", code, k)
            return None

        if not isinstance(data, dict) or data.get("code") != code or data.get("k") != k:
            return None
        return Decision(
            code=code,
            k=k,
            fits=bool(data.get("fits")),
            computed_at=float(data.get("computed_at") or 0.0),
        )

    def put(self, decision: Decision) -> None:
        decision.touch()
        payload = asdict(decision)
        self._redis.setex(self._key(decision.code, decision.k), self._ttl_seconds, json.dumps(payload))

    def clear(self) -> None:
        for key in self._redis.scan_iter(match=f"{self._prefix}:decision:*"):
            self._redis.delete(key)
