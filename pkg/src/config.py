import os


def _env_bool(name: str, default: bool = False) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "y", "on"}


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        return default


def _env_float(name: str, default: float) -> float:
    value = os.getenv(name)
    if value is None:
        return default
    try:
        return float(value)
    except ValueError:
        return default


class Settings:
    def __init__(self) -> None:
        # Exhaustive primitives (minimal separators, canonical codes).
        self.size_guard = _env_int("SBN_SIZE_GUARD", 16)
        # Brute-force bramble oracle: the compatibility graph explodes past 8 vertices.
        self.oracle_guard = _env_int("SBN_ORACLE_GUARD", 8)
        self.search_guard = _env_int("SBN_SEARCH_GUARD", 12)
        # Gadget outputs are large but very sparse; the lenient search copes with them.
        self.reduction_guard = _env_int("SBN_REDUCTION_GUARD", 24)
        self.treewidth_guard = _env_int("SBN_TREEWIDTH_GUARD", 14)
        self.pattern_guard = _env_int("SBN_PATTERN_GUARD", 8)
        self.clique_cap = _env_int("SBN_CLIQUE_CAP", 10_000_000)

        self.worker_threads = max(1, _env_int("SBN_THREADS", 1))
        self.log_level = os.getenv("LOG_LEVEL", "INFO").strip().upper() or "INFO"

        # Optional: Redis for sharing obstruction-search decisions across runs.
        # Example: redis://localhost:6379/0
        self.redis_url = os.getenv("REDIS_URL", "").strip()
        self.redis_key_prefix = os.getenv("REDIS_KEY_PREFIX", "sbn").strip() or "sbn"
        self.redis_required = _env_bool("REDIS_REQUIRED", False)
        self.redis_ttl_seconds = _env_int("REDIS_TTL_SECONDS", 7 * 24 * 60 * 60)

        # Error tracking via Sentry.  Set SENTRY_DSN to enable.
        self.sentry_dsn = os.getenv("SENTRY_DSN", "").strip()
        self.sentry_environment = os.getenv("SENTRY_ENVIRONMENT", "production").strip() or "production"
        self.sentry_traces_sample_rate = _env_float("SENTRY_TRACES_SAMPLE_RATE", 0.0)


SETTINGS = Settings()


def resolve_guard(guard: int | None, default: int) -> int:
    """Explicit guard wins over the configured one."""
    if guard is None:
        return default
    return int(guard)
