from __future__ import annotations

import logging

from ..config import SETTINGS, Settings
from .decision_store import Decision, DecisionStore, InMemoryDecisionStore
from .redis_decision_store import RedisDecisionStore, create_redis_client

logger = logging.getLogger(__name__)


def open_decision_store(settings: Settings = SETTINGS) -> DecisionStore:
    """Redis-backed store when REDIS_URL is set, otherwise in-memory.

    An unreachable Redis falls back to memory unless REDIS_REQUIRED is set."""
    if not settings.redis_url:
        return InMemoryDecisionStore()
    try:
        client = create_redis_client(settings.redis_url)
        if client is None:
            return InMemoryDecisionStore()
        client.ping()
        logger.info("Redis enabled for obstruction-search decisions")
        return RedisDecisionStore(
            redis_client=client,
            ttl_seconds=settings.redis_ttl_seconds,
            key_prefix=settings.redis_key_prefix,
        )
    except Exception:  # noqa: BLE001
        if settings.redis_required:
            logger.exception("Failed to initialize Redis")
            raise
        logger.warning("Redis unavailable, caching decisions in memory", exc_info=True)
        return InMemoryDecisionStore()


__all__ = [
    "Decision",
    "DecisionStore",
    "InMemoryDecisionStore",
    "RedisDecisionStore",
    "create_redis_client",
    "open_decision_store",
]
