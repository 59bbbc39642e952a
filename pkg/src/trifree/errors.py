"""Shared error types."""

from __future__ import annotations


class BudgetExceededError(ValueError):
    """An enumeration or search would exceed its configured budget.

    Raised before any expensive work starts, so callers can retry with a
    larger budget or switch to a cheaper algorithm.
    """
