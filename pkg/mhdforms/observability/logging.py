"""Structured logging with run identifiers for mhdforms.

Every module logs through structlog with snake_case event names and
key-value context:

    from mhdforms.observability import get_logger, configure_logging

    configure_logging(level="INFO", format="json")
    logger = get_logger(__name__)
    logger.info("picard_iteration", iteration=3, distance=1.2e-9)

A CLI command binds a run identifier for its whole duration, so every line
of one run can be grepped together:

    with bind_run_context(command="simulate") as run_id:
        ...
"""

from __future__ import annotations

import logging
import logging.handlers
import sys
import uuid
from contextlib import contextmanager
from contextvars import ContextVar
from pathlib import Path
from typing import Iterator, Optional

import structlog
from structlog.types import EventDict, Processor

run_id_var: ContextVar[Optional[str]] = ContextVar("run_id", default=None)

LOG_FORMATS = ("json", "console")


def add_run_id(
    logger: logging.Logger, method_name: str, event_dict: EventDict
) -> EventDict:
    """Attach the active run identifier, if any."""
    run_id = run_id_var.get()
    if run_id:
        event_dict["run_id"] = run_id
    return event_dict


def add_log_level(
    logger: logging.Logger, method_name: str, event_dict: EventDict
) -> EventDict:
    """Record the level name, normalising ``warn`` to ``warning``."""
    if method_name == "warn":
        method_name = "warning"
    event_dict["level"] = method_name
    return event_dict


def configure_logging(
    level: str = "INFO",
    format: str = "console",
    log_file: Optional[Path] = None,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
) -> None:
    """Configure structured logging.

    Logs go to stderr (and optionally a rotating file); stdout stays free
    for command reports.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format: Output format ("json" or "console")
        log_file: Optional path for file logging with rotation
        max_bytes: Maximum size of log file before rotation
        backup_count: Number of backup files to keep

    Example:
        >>> configure_logging(level="DEBUG", format="console")
        >>> configure_logging(level="INFO", format="json", log_file=Path("out/mhdforms.log"))
    """
    logging_level = getattr(logging, level.upper(), logging.INFO)

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(
            logging.handlers.RotatingFileHandler(
                filename=str(log_file),
                maxBytes=max_bytes,
                backupCount=backup_count,
                encoding="utf-8",
            )
        )

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(logging_level)
    for handler in handlers:
        handler.setLevel(logging_level)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root_logger.addHandler(handler)

    shared_processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_logger_name,
        add_run_id,
        add_log_level,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
    ]
    renderer: Processor = (
        structlog.processors.JSONRenderer()
        if format == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=shared_processors + [renderer],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger instance.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Configured structlog BoundLogger

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("duhamel_weights", nodes=65, unique_rates=12)
    """
    return structlog.get_logger(name)


@contextmanager
def bind_run_context(run_id: Optional[str] = None, **context: object) -> Iterator[str]:
    """Bind a run identifier (and extra context) for the enclosed block.

    Args:
        run_id: Identifier to bind (auto-generated if None)
        **context: Extra key-values merged into every log line

    Yields:
        The bound run identifier
    """
    if run_id is None:
        run_id = f"run-{uuid.uuid4().hex[:12]}"
    token = run_id_var.set(run_id)
    structlog.contextvars.bind_contextvars(**context)
    try:
        yield run_id
    finally:
        structlog.contextvars.unbind_contextvars(*context)
        run_id_var.reset(token)


def get_run_id() -> Optional[str]:
    """Return the active run identifier, if any."""
    return run_id_var.get()


try:
    configure_logging(level="WARNING", format="console")
except Exception:
    logging.basicConfig(level=logging.WARNING)


__all__ = [
    "LOG_FORMATS",
    "bind_run_context",
    "configure_logging",
    "get_logger",
    "get_run_id",
]
