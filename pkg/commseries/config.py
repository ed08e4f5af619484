"""
Settings loaded from the environment (and an optional .env file)
"""

import logging
import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import find_dotenv, load_dotenv

# Set up logging
logger = logging.getLogger(__name__)

ORDERS = ("grevlex", "lex")


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={value!r}, using {default}")
        return default


@dataclass(frozen=True)
class Settings:
    """
    Defaults for the command line and the batch runner.

    Attributes:
        monomial_order: Monomial order of the ideal computations ("grevlex" or "lex")
        variety_depth: Default depth budget for commutativity-ideal stabilisation
        concurrent: Fan out independent queries to a thread pool
        max_concurrent: Number of workers when concurrent is set
        log_level: Name of the logging level used by the CLI
    """

    monomial_order: str = "grevlex"
    variety_depth: int = 6
    concurrent: bool = False
    max_concurrent: int = 4
    log_level: str = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Read COMMSERIES_* variables, loading a .env file from the working directory first.

    Returns:
        The process-wide Settings record
    """
    load_dotenv(find_dotenv(usecwd=True))
    order = os.getenv("COMMSERIES_MONOMIAL_ORDER", "grevlex").strip().lower()
    if order not in ORDERS:
        logger.warning(f"Unknown monomial order {order!r}, falling back to grevlex")
        order = "grevlex"
    return Settings(
        monomial_order=order,
        variety_depth=_env_int("COMMSERIES_VARIETY_DEPTH", 6),
        concurrent=_env_bool("COMMSERIES_CONCURRENT", False),
        max_concurrent=max(1, _env_int("COMMSERIES_MAX_CONCURRENT", 4)),
        log_level=os.getenv("COMMSERIES_LOG_LEVEL", "WARNING").upper(),
    )
