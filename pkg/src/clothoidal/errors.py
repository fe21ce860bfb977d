"""Exception hierarchy used across the package.

Errors that can point at a specific couple in a sequence carry an optional
``index`` attribute so callers (CLI, HTTP service) can report the offending
entry.
"""

from __future__ import annotations


class ClothoidError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ClothoidError):
    """Input data violates a documented precondition.

    ``code`` is a short machine-readable tag, ``index`` the offending couple
    index where one exists.
    """

    def __init__(self, message: str, *, code: str = "invalid", index: int | None = None):
        super().__init__(message)
        self.code = code
        self.index = index


class ParseError(ClothoidError):
    """A document could not be decoded at all (malformed JSON and friends)."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class DegenerateSecant(ClothoidError):
    """Two couples are too close together to define a secant direction."""

    def __init__(self, message: str, *, index: int | None = None):
        super().__init__(message)
        self.index = index


class DegenerateTriple(ClothoidError):
    """Three points meant to define a circle have a repeated vertex."""

    def __init__(self, message: str, *, index: int | None = None):
        super().__init__(message)
        self.index = index


class DomainViolation(ClothoidError):
    """An angle pair lies outside the domain accepted by the fit policy."""


class VanishingIntegral(ClothoidError):
    """The oscillatory integral is numerically zero, so no similarity exists."""


class NewtonBreakdown(ClothoidError):
    """The scalar Newton update hit a vanishing derivative."""


class WeightSum(ClothoidError):
    """Average weights do not sum to one."""


class SequenceTooShort(ClothoidError):
    """A refinement operator needs more couples than the sequence has."""


class ResourceLimit(ClothoidError):
    """A refinement would exceed the configured size budget."""
