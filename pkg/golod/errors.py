"""
Exception Types for the Golod Toolkit
=====================================

Domain preconditions raise plain ``ValueError``; the classes here cover the
cases the CLI needs to tell apart.
"""

from typing import Optional


class ComplexFormatError(ValueError):
    """Malformed complex input, with the position of the first problem."""

    def __init__(self, message: str, source: str = "<input>",
                 line: Optional[int] = None, column: Optional[int] = None,
                 path: Optional[str] = None):
        self.source = source
        self.line = line
        self.column = column
        self.path = path
        super().__init__(message)

    def __str__(self) -> str:
        where = self.source
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        if self.path:
            where += f" ({self.path})"
        return f"{where}: {self.args[0]}"


class CapExceededError(RuntimeError):
    """An exhaustive scan would exceed its configured size cap."""

    def __init__(self, quantity: str, value: int, limit: int, hint: str = ""):
        self.quantity = quantity
        self.value = value
        self.limit = limit
        message = f"{quantity} = {value} exceeds the cap {limit}"
        if hint:
            message += f" ({hint})"
        super().__init__(message)


class ConsistencyError(AssertionError):
    """An internal mathematical check failed (bug, not bad input)."""
