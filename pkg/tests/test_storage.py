from __future__ import annotations

import fnmatch
import json

import pytest

import src.storage as storage
from src.config import Settings
from src.storage import Decision, InMemoryDecisionStore, RedisDecisionStore, open_decision_store


class FakeRedis:
    def __init__(self) -> None:
        self.data: dict[str, str] = {}
        self.ttls: dict[str, int] = {}

    def ping(self) -> bool:
        return True

    def get(self, key: str) -> str | None:
        return self.data.get(key)

    def setex(self, key: str, ttl: int, value: str) -> None:
        self.data[key] = value
        self.ttls[key] = ttl

    def scan_iter(self, match: str):
        return [key for key in list(self.data) if fnmatch.fnmatch(key, match)]

    def delete(self, key: str) -> None:
        self.data.pop(key, None)


def test_in_memory_store_counts_hits() -> None:
    store = InMemoryDecisionStore()
    assert store.get("D|s", 2) is None
    store.put(Decision(code="D|s", k=2, fits=False))
    cached = store.get("D|s", 2)
    assert cached is not None and not cached.fits
    assert cached.computed_at > 0
    assert store.get("D|s", 3) is None
    assert (store.hits, store.misses) == (1, 2)
    assert len(store) == 1
    store.clear()
    assert len(store) == 0


def test_redis_store_round_trip() -> None:
    client = FakeRedis()
    store = RedisDecisionStore(redis_client=client, ttl_seconds=5, key_prefix="t")
    store.put(Decision(code="C~", k=2, fits=True))
    assert list(client.data) == ["t:decision:2:C~"]
    assert client.ttls["t:decision:2:C~"] == 60
    cached = store.get("C~", 2)
    assert cached is not None and cached.fits
    assert store.get("C~", 1) is None


def test_redis_store_ignores_bad_payloads() -> None:
    client = FakeRedis()
    store = RedisDecisionStore(redis_client=client, ttl_seconds=600)
    client.data["sbn:decision:2:C~"] = "not json"
    assert store.get("C~", 2) is None
    client.data["sbn:decision:2:C~"] = json.dumps({"code": "Bw", "k": 2, "fits": True})
    assert store.get("C~", 2) is None


def test_redis_store_clear_keeps_other_keys() -> None:
    client = FakeRedis()
    client.data["other"] = "x"
    store = RedisDecisionStore(redis_client=client, ttl_seconds=600)
    store.put(Decision(code="C~", k=2, fits=True))
    store.put(Decision(code="D|s", k=2, fits=False))
    store.clear()
    assert client.data == {"other": "x"}


def test_open_store_without_url(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("REDIS_URL", raising=False)
    assert isinstance(open_decision_store(Settings()), InMemoryDecisionStore)


def test_open_store_uses_redis(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("REDIS_URL", "redis://cache:6379/0")
    monkeypatch.setattr(storage, "create_redis_client", lambda url: FakeRedis())
    assert isinstance(open_decision_store(Settings()), RedisDecisionStore)


def _unreachable(url: str) -> FakeRedis:
    raise ConnectionError(f"cannot reach {url}")


def test_open_store_falls_back_to_memory(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("REDIS_URL", "redis://cache:6379/0")
    monkeypatch.delenv("REDIS_REQUIRED", raising=False)
    monkeypatch.setattr(storage, "create_redis_client", _unreachable)
    assert isinstance(open_decision_store(Settings()), InMemoryDecisionStore)


def test_required_redis_raises(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("REDIS_URL", "redis://cache:6379/0")
    monkeypatch.setenv("REDIS_REQUIRED", "yes")
    monkeypatch.setattr(storage, "create_redis_client", _unreachable)
    with pytest.raises(ConnectionError):
        open_decision_store(Settings())
