"""Error types and document helpers."""

from directed_cqsf.utils.errors import (
    BudgetExceededError,
    CqsfError,
    InvalidInputError,
    NotSymmetricError,
)

__all__ = ["BudgetExceededError", "CqsfError", "InvalidInputError", "NotSymmetricError"]
