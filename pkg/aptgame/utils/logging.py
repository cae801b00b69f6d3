"""
Logging helpers for aptgame.

Library modules call ``get_logger(__name__)`` and never configure handlers.
The CLI calls ``configure_logging`` once; records go to stderr so that data
written to stdout stays machine-readable.
"""

import logging
import sys
from typing import Optional, TextIO

ROOT_LOGGER = "aptgame"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def get_logger(name: str) -> logging.Logger:
    if name != ROOT_LOGGER and not name.startswith(ROOT_LOGGER + "."):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)


def configure_logging(level: int = logging.WARNING,
                      stream: Optional[TextIO] = None) -> logging.Logger:
    """Install a single stream handler on the package logger."""
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
