"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import Any


class CqsfError(Exception):
    """Base class for all errors raised by directed_cqsf."""


class InvalidInputError(CqsfError, ValueError):
    """Raised when an argument violates a documented precondition."""


class NotSymmetricError(CqsfError, ValueError):
    """Raised when a symmetric function is required but the input is not.

    Attributes:
        witness: Two compositions that are rearrangements of one another
            but carry different coefficients.
    """

    def __init__(self, message: str, witness: tuple[Any, Any] | None = None):
        super().__init__(message)
        self.witness = witness


class BudgetExceededError(CqsfError, RuntimeError):
    """Raised when an enumeration would exceed the configured size budget."""

    def __init__(self, message: str, requested: int, budget: int):
        super().__init__(message)
        self.requested = requested
        self.budget = budget
