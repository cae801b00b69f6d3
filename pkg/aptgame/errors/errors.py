"""
Error classes and error handling for aptgame
"""

from typing import Optional, Any, List
from dataclasses import dataclass
import traceback
import sys


@dataclass
class ErrorContext:
    """Context information for an error"""
    field: Optional[str] = None
    value: Any = None
    operation: Optional[str] = None
    source: Optional[str] = None
    line: Optional[int] = None


class AptGameError(Exception):
    """Base class for all aptgame errors"""

    def __init__(self, message: str, context: Optional[ErrorContext] = None):
        super().__init__(message)
        self.message = message
        self.context = context or ErrorContext()
        self.inner_exception: Optional[Exception] = None

    def with_context(self, **kwargs) -> 'AptGameError':
        """Add context information to the error"""
        for key, value in kwargs.items():
            if hasattr(self.context, key):
                setattr(self.context, key, value)
        return self

    def with_inner_exception(self, exc: Exception) -> 'AptGameError':
        """Set inner exception"""
        self.inner_exception = exc
        return self

    def __str__(self) -> str:
        base = f"{self.__class__.__name__}: {self.message}"

        if self.context.source:
            location = f" at {self.context.source}"
            if self.context.line is not None:
                location += f":{self.context.line}"
            base += location

        if self.inner_exception:
            base += f"\nCaused by: {self.inner_exception}"

        return base

    def detailed_string(self) -> str:
        """Get detailed error string with context"""
        lines = [str(self)]

        if self.context.field is not None:
            lines.append(f"  field: {self.context.field}")
        if self.context.value is not None:
            lines.append(f"  value: {self.context.value!r}")
        if self.context.operation is not None:
            lines.append(f"  operation: {self.context.operation}")

        if self.inner_exception:
            lines.append(f"\nInner exception: {self.inner_exception}")
            if self.inner_exception.__traceback__ is not None:
                lines.extend(traceback.format_exception(
                    type(self.inner_exception),
                    self.inner_exception,
                    self.inner_exception.__traceback__
                ))

        return '\n'.join(lines)


class ValidationError(AptGameError):
    """A parameter, profile or grid violates its range or ordering invariant"""

    def __init__(self, message: str, field: Optional[str] = None, value: Any = None):
        super().__init__(message, ErrorContext(field=field, value=value))

    @property
    def field(self) -> Optional[str]:
        return self.context.field


class DomainError(AptGameError):
    """An operation precondition does not hold"""

    def __init__(self, message: str, operation: Optional[str] = None, value: Any = None):
        super().__init__(message, ErrorContext(operation=operation, value=value))


class ConfigError(ValidationError):
    """Malformed config file, unknown key or unparsable number"""
    pass


class ErrorHandler:
    """Reports errors on stderr and keeps the ones it has seen"""

    def __init__(self, show_traceback: bool = False, stream=None):
        self.show_traceback = show_traceback
        self.stream = stream
        self.errors: List[AptGameError] = []

    def _out(self):
        return self.stream if self.stream is not None else sys.stderr

    def error(self, error: AptGameError) -> None:
        """Record an error"""
        self.errors.append(error)
        print(ErrorReporter.format_error(error, self.show_traceback), file=self._out())


class ErrorReporter:
    """Formats errors for display"""

    @staticmethod
    def format_error(error: AptGameError, show_context: bool = True) -> str:
        if show_context:
            return error.detailed_string()
        return str(error)
