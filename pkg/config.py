#!/usr/bin/env python3
"""
Runtime settings read from the environment, plus logging setup
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

import psutil
from rich.console import Console
from rich.logging import RichHandler

from errors import InvalidArgument

ENV_PREFIX = "ORDMATCH_"

DEFAULT_BUDGET = 20_000_000
DEFAULT_SEARCH_CEILING = 9
DEFAULT_RAMSEY_CEILING = 10
DEFAULT_MAX_WITNESSES = 256


def default_threads() -> int:
    """Physical core count, falling back to logical cores and then to 1"""
    count = psutil.cpu_count(logical=False) or psutil.cpu_count(logical=True)
    return max(1, count or 1)


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidArgument(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise InvalidArgument(f"{ENV_PREFIX}{name} must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    search_ceiling: int = DEFAULT_SEARCH_CEILING
    ramsey_ceiling: int = DEFAULT_RAMSEY_CEILING
    seed: int = 0
    data_dir: str = "data"
    log_level: str = "WARNING"
    max_witnesses: int = DEFAULT_MAX_WITNESSES

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings from ORDMATCH_* environment variables

        Returns:
            Settings: Values from the environment, defaults elsewhere
        """
        return cls(
            budget=_env_int("BUDGET", DEFAULT_BUDGET, minimum=1),
            threads=_env_int("THREADS", default_threads(), minimum=1),
            search_ceiling=_env_int("SEARCH_CEILING", DEFAULT_SEARCH_CEILING, minimum=1),
            ramsey_ceiling=_env_int("RAMSEY_CEILING", DEFAULT_RAMSEY_CEILING, minimum=1),
            seed=_env_int("SEED", 0),
            data_dir=os.getenv(ENV_PREFIX + "DATA_DIR", "data"),
            log_level=os.getenv(ENV_PREFIX + "LOG_LEVEL", "WARNING").upper(),
            max_witnesses=_env_int("MAX_WITNESSES", DEFAULT_MAX_WITNESSES, minimum=1),
        )

    def override(self, **changes) -> "Settings":
        """Return a copy with every non-None keyword applied"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """
    Route library logging through a rich handler on stderr

    Args:
        level (str, optional): Logging level name, defaults to the environment setting
    """
    global _configured
    level = (level or os.getenv(ENV_PREFIX + "LOG_LEVEL", "WARNING")).upper()
    root = logging.getLogger()
    if not _configured:
        handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        root.addHandler(handler)
        _configured = True
    root.setLevel(getattr(logging, level, logging.WARNING))
