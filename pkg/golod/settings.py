"""
Analysis Settings
=================

Caps and worker counts for the exhaustive subset scans, read from the
environment with defaults. CLI flags override what the environment sets.
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

DEFAULT_HOCHSTER_MAX_M = 24
DEFAULT_PAIR_SCAN_LIMIT = 3 ** 14
DEFAULT_ORACLE_MAX_M = 12


@dataclass(frozen=True)
class AnalysisSettings:
    """Limits shared by the Hochster, product and oracle computations.

    Attributes:
        threads: Worker processes for subset scans (1 means serial)
        hochster_max_m: Largest vertex universe scanned over all 2^m subsets
        pair_scan_limit: Largest 3^m disjoint pair count the product scan accepts
        oracle_max_m: Largest vertex universe the Koszul oracle accepts
        force: Lift the Hochster and pair-scan caps (never the oracle cap)
        log_level: Logging level name used by the CLI
    """

    threads: int = 1
    hochster_max_m: int = DEFAULT_HOCHSTER_MAX_M
    pair_scan_limit: int = DEFAULT_PAIR_SCAN_LIMIT
    oracle_max_m: int = DEFAULT_ORACLE_MAX_M
    force: bool = False
    log_level: str = "WARNING"

    def with_overrides(self, threads: Optional[int] = None,
                       force: Optional[bool] = None) -> "AnalysisSettings":
        changes = {}
        if threads is not None:
            changes["threads"] = threads
        if force is not None:
            changes["force"] = force
        return replace(self, **changes)


def _int_from_env(environ: Mapping[str, str], name: str, default: int,
                  minimum: int = 1) -> int:
    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw, 0)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def create_settings_from_env(environ: Optional[Mapping[str, str]] = None) -> AnalysisSettings:
    """Create analysis settings using environment variables.

    Environment variables:
        GOLOD_THREADS: Worker count (default: all cores)
        GOLOD_HOCHSTER_MAX_M: Exhaustive subset scan cap (default: 24)
        GOLOD_PAIR_SCAN_LIMIT: Disjoint pair scan cap (default: 3**14)
        GOLOD_ORACLE_MAX_M: Koszul oracle cap (default: 12)
        GOLOD_LOG_LEVEL: Logging level name (default: WARNING)

    Args:
        environ: Mapping to read instead of ``os.environ``

    Returns:
        Configured AnalysisSettings instance

    Raises:
        ValueError: If a variable is set to a malformed value
    """
    env = os.environ if environ is None else environ

    threads = _int_from_env(env, "GOLOD_THREADS", os.cpu_count() or 1)
    hochster_max_m = _int_from_env(env, "GOLOD_HOCHSTER_MAX_M", DEFAULT_HOCHSTER_MAX_M)
    pair_scan_limit = _int_from_env(env, "GOLOD_PAIR_SCAN_LIMIT", DEFAULT_PAIR_SCAN_LIMIT)
    oracle_max_m = _int_from_env(env, "GOLOD_ORACLE_MAX_M", DEFAULT_ORACLE_MAX_M)

    log_level = env.get("GOLOD_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
    if not isinstance(logging.getLevelName(log_level), int):
        raise ValueError(f"GOLOD_LOG_LEVEL must be a logging level name, got {log_level!r}")

    return AnalysisSettings(
        threads=threads,
        hochster_max_m=hochster_max_m,
        pair_scan_limit=pair_scan_limit,
        oracle_max_m=oracle_max_m,
        log_level=log_level,
    )
