"""Typed error and warning classes raised across the package.

Every error subclasses both :class:`FreqaugError` (so callers can catch
anything raised here with one except clause) and a builtin category
(``ValueError`` or ``ArithmeticError``) so untyped callers keep working.
"""
from __future__ import annotations

__all__ = [
    "FreqaugError",
    "InvalidInputError",
    "SizeError",
    "ParameterError",
    "EmptyBandError",
    "DataError",
    "ParseError",
    "ConfigError",
    "NumericError",
    "ClampedTopKWarning",
]


class FreqaugError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(FreqaugError, ValueError):
    """Numeric input contains NaN or infinity, or has the wrong dtype/kind."""


class SizeError(FreqaugError, ValueError):
    """A length, shape, or row count violates an operation's contract."""


class ParameterError(FreqaugError, ValueError):
    """A parameter value is outside its documented domain."""


class EmptyBandError(ParameterError):
    """A band policy selected zero bins, leaving nothing to operate on."""


class DataError(FreqaugError, ValueError):
    """Loaded data violates a content requirement (missing cell, zero spread)."""


class ParseError(FreqaugError, ValueError):
    """A CSV cell could not be parsed; the message names line and column."""


class ConfigError(FreqaugError, ValueError):
    """An experiment config is malformed or contains unknown keys."""


class NumericError(FreqaugError, ArithmeticError):
    """A linear solve failed; the message suggests a remedy."""


class ClampedTopKWarning(UserWarning):
    """Requested k exceeded the candidate count; the selection was clamped."""
