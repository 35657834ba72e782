"""Structured logging setup."""

import logging
import sys

import structlog

from ..config import get_settings


def configure_logging(level: str = None, fmt: str = None) -> None:
    """
    Configure structlog for the process.

    Log records go to stderr so report output on stdout stays deterministic.

    Args:
        level: Log level name, defaults to the ``log_level`` setting
        fmt: ``json`` or ``console``, defaults to the ``log_format`` setting
    """
    settings = get_settings()
    level_name = (level or settings.log_level).upper()
    fmt = fmt or settings.log_format

    renderer = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if fmt == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            getattr(logging, level_name, logging.WARNING)
        ),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str = None) -> structlog.stdlib.BoundLogger:
    """Return a structlog logger bound to a module name."""
    return structlog.get_logger(name)
