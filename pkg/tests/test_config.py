from __future__ import annotations

import pytest

from src.config import Settings, resolve_guard


def test_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("SBN_SIZE_GUARD", "SBN_ORACLE_GUARD", "SBN_THREADS", "REDIS_URL", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    settings = Settings()
    assert settings.size_guard == 16
    assert settings.oracle_guard == 8
    assert settings.worker_threads == 1
    assert settings.redis_url == ""
    assert settings.log_level == "INFO"


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SBN_SEARCH_GUARD", "9")
    monkeypatch.setenv("SBN_THREADS", "0")
    monkeypatch.setenv("REDIS_REQUIRED", "yes")
    monkeypatch.setenv("SENTRY_TRACES_SAMPLE_RATE", "0.25")
    monkeypatch.setenv("LOG_LEVEL", " debug ")
    settings = Settings()
    assert settings.search_guard == 9
    assert settings.worker_threads == 1
    assert settings.redis_required is True
    assert settings.sentry_traces_sample_rate == 0.25
    assert settings.log_level == "DEBUG"


def test_malformed_numbers_fall_back(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SBN_TREEWIDTH_GUARD", "lots")
    assert Settings().treewidth_guard == 14


def test_resolve_guard() -> None:
    assert resolve_guard(None, 16) == 16
    assert resolve_guard(4, 16) == 4
