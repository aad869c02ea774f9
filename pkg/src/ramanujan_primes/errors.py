"""Exception types shared across the package."""

from __future__ import annotations


class RangeQueryError(ValueError):
    """A query (pi, nth_prime, ratio count) fell outside the sieved range.

    Raised instead of extrapolating: answers outside the table would not be
    certified and must never be guessed.
    """


class ResourceBudgetError(RuntimeError):
    """A computation would exceed the configured sieve or memory budget.

    Attributes:
        required: the limit/bytes that would have been needed.
        cap: the configured ceiling that blocked it.
        partial: optionally, uncertified partial results computed so far.
    """

    def __init__(self, message: str, *, required: int | None = None,
                 cap: int | None = None, partial=None):
        super().__init__(message)
        self.required = required
        self.cap = cap
        self.partial = partial


class ThresholdDomainError(ValueError):
    """An analytic estimate was evaluated below its certified validity range."""
