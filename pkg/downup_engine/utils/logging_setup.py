"""Logging configuration for the down-up engine."""

import logging
import sys
from typing import TextIO

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(level: str = "WARNING", stream: TextIO | None = None) -> logging.Logger:
    """
    Configure structured logging for the engine.

    Records go to stderr (or ``stream``); stdout is reserved for command
    output so that ``--json`` results stay parseable. Calling this again
    updates the level and rebinds the existing handler to the current stream.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
        stream: Destination for records, sys.stderr when omitted

    Returns:
        Configured logger instance.
    """
    logger = logging.getLogger("downup_engine")
    logger.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    target = stream or sys.stderr

    # one handler, reused across engines
    for handler in logger.handlers:
        if isinstance(handler, logging.StreamHandler):
            handler.stream = target
            return logger

    handler = logging.StreamHandler(target)
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    logger.addHandler(handler)

    return logger


def get_logger(name: str = "downup_engine") -> logging.Logger:
    """Get a logger instance with the given name."""
    return logging.getLogger(name)
