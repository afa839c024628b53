"""
Configuration handling for the chainring CLI.
"""

import logging
import os
import sys
from typing import List, Tuple

from dotenv import load_dotenv

from chainring.core import settings
from chainring.errors import ConfigError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


def load_environment() -> None:
    """Load ``.env`` from the working directory without overriding the process environment."""
    load_dotenv()


def configure_logging(verbose: bool = False) -> None:
    """
    Configure the root logger once, on stderr.

    Args:
        verbose: DEBUG when set, otherwise CHAINRING_LOG_LEVEL (default WARNING)
    """
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def parse_sizes(text: str) -> List[Tuple[int, int]]:
    """
    Parse ``a:b,c:d`` pairs; a plain ``n`` stands for ``n:n``.

    Raises:
        ConfigError: If a part is not an integer pair
    """
    sizes = []
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        try:
            if ":" in part:
                a, b = part.split(":")
                sizes.append((int(a), int(b)))
            else:
                sizes.append((int(part), int(part)))
        except ValueError:
            raise ConfigError("sizes", f"cannot parse '{part}' (expected a:b or n)")
    if any(a < 0 or b < 0 for a, b in sizes):
        raise ConfigError("sizes", "sizes must be non-negative")
    return sizes


def env_summary() -> List[Tuple[str, str]]:
    return [
        ("CHAINRING_MAX_PART", str(settings.max_part())),
        ("CHAINRING_WORKERS", str(settings.workers())),
        ("CHAINRING_LOG_LEVEL", settings.log_level()),
        ("working directory", os.getcwd()),
    ]
