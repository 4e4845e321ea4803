"""Exception hierarchy shared across the library."""

from __future__ import annotations


class EpsnetError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(EpsnetError):
    """Operands live in different ambient dimensions."""


class DegenerateInputError(EpsnetError):
    """Input violates a general-position requirement of the operation."""


class InfeasibleCountError(EpsnetError):
    """A requested split count cannot be realised."""


class ConditionError(EpsnetError):
    """Construction preconditions on the epsilon profile fail.

    The message names the violated inequality.
    """


class ConstructionFailureError(EpsnetError):
    """A best-effort construction could not complete; carries its trace."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class BudgetExceededError(EpsnetError):
    """An enumeration would exceed the configured budget.

    ``required`` is the budget that would have been needed.
    """

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class UnsupportedDimensionError(EpsnetError):
    """The operation has no exact procedure in this dimension."""
