"""Observability for mhdforms: structured logging with run identifiers.

Usage:
    from mhdforms.observability import get_logger

    logger = get_logger(__name__)
    logger.info("simulate_started", preset="small-taylor-green")
"""

from mhdforms.observability.logging import (
    LOG_FORMATS,
    bind_run_context,
    configure_logging,
    get_logger,
    get_run_id,
)

__all__ = [
    "LOG_FORMATS",
    "bind_run_context",
    "configure_logging",
    "get_logger",
    "get_run_id",
]
