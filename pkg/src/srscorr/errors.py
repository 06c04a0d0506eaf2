"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["SrsCorrError", "DomainError", "EnumerationBoundError"]


class SrsCorrError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SrsCorrError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class EnumerationBoundError(SrsCorrError):
    """A brute-force enumeration would exceed the configured subset budget."""
