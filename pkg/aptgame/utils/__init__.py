"""
aptgame Utilities Module

``aptgame.utils.config`` is imported explicitly by the CLI; it depends on the
model and oracle packages, which themselves use the logging helpers here.
"""

from .logging import get_logger, configure_logging

__all__ = [
    'get_logger',
    'configure_logging',
]
