"""Error taxonomy shared across modules and mapped to CLI exit codes."""

__all__ = ["CheckersurfError", "SchemaError", "BudgetError", "InvariantError"]


class CheckersurfError(Exception):
    """Base class for package errors."""


class SchemaError(CheckersurfError):
    """Malformed user input (JSON shape, ranges, incompatible objects)."""


class BudgetError(CheckersurfError):
    """An enumeration would exceed its configured budget."""


class InvariantError(CheckersurfError):
    """An internal runtime check failed; indicates a bug, not bad input."""
