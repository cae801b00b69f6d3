"""
aptgame Error Handling Module
"""

from .errors import (
    ErrorContext,
    AptGameError,
    ValidationError,
    DomainError,
    ConfigError,
    ErrorHandler,
    ErrorReporter
)

__all__ = [
    'ErrorContext',
    'AptGameError',
    'ValidationError',
    'DomainError',
    'ConfigError',
    'ErrorHandler',
    'ErrorReporter'
]
