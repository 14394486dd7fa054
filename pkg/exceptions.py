"""
Error taxonomy for the connectivity toolkit.
Helpers and services raise these; the orchestrator turns them into result dicts.
"""

from typing import Optional


class KapcError(Exception):
    """Base class for all toolkit errors"""


class FieldMismatchError(KapcError):
    """Operands belong to different prime fields"""


class DivisionByZeroError(KapcError, ZeroDivisionError):
    """Inversion of zero in F_p"""


class DimensionError(KapcError, ValueError):
    """Matrix shapes do not line up"""


class SingularError(KapcError):
    """Matrix is not invertible; carries the rank elimination reached"""

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


class ParameterError(KapcError, ValueError):
    """Invalid argument such as k <= 0 or s == t"""


class ParseError(KapcError):
    """Malformed edge-list document"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_number = line_number


class EncodingFailure(KapcError):
    """A random draw produced a singular I - K; retry with fresh randomness"""


class EncodingExhaustedError(KapcError):
    """Every retry of an encoding hit a singular draw"""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts
