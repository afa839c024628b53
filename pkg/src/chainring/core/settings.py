"""
Environment-backed defaults.

Values come from the process environment; the CLI loads ``.env`` with
python-dotenv before anything here is read.
"""

import os

DEFAULT_MAX_PART = 20000


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def max_part() -> int:
    """Largest graph part that may be materialized (CHAINRING_MAX_PART)."""
    return _int_env("CHAINRING_MAX_PART", DEFAULT_MAX_PART)


def workers() -> int:
    """Thread pool size for trials and row-parallel builds (CHAINRING_WORKERS)."""
    return _int_env("CHAINRING_WORKERS", 1)


def log_level() -> str:
    return os.getenv("CHAINRING_LOG_LEVEL", "WARNING").upper()
