"""
Exception hierarchy for PyQColor

Every error raised deliberately by the package derives from ``QColorError``
and also from the closest builtin, so callers can catch either.
"""

from typing import Optional


class QColorError(Exception):
    """Base class for all PyQColor errors."""


class ParameterError(QColorError, ValueError):
    """A caller supplied a parameter outside its valid range."""


class ContractError(QColorError, ValueError):
    """Arguments violate an operation's precondition."""


class VertexIndexError(QColorError, IndexError):
    """A vertex index lies outside ``[0, n_vertices)``."""


class DimacsParseError(QColorError, ValueError):
    """A DIMACS ``.col`` stream could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class OracleBudgetError(QColorError, RuntimeError):
    """Exhaustive enumeration was refused because the instance is too large."""


class ArtifactFormatError(QColorError, ValueError):
    """A result artifact (CSV, JSON, coloring file) has an unexpected layout."""
