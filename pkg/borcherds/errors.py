#!/usr/bin/env python3
"""
Exception hierarchy shared by every borcherds module.

Each class carries the process exit code the command-line front end uses
when the error escapes a command.
"""

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_IDENTITY = 4
EXIT_NO_CONGRUENCE = 5
EXIT_THRESHOLD_UNMET = 6
EXIT_INTERRUPTED = 130


class BorcherdsError(Exception):
    """Base class for all errors raised by the package."""

    exit_code = EXIT_FAILURE


class RingMismatchError(BorcherdsError, TypeError):
    """Two series over different coefficient rings were combined."""

    exit_code = EXIT_USAGE


class TruncationError(BorcherdsError, IndexError):
    """A coefficient at or beyond the truncation order was requested."""

    exit_code = EXIT_PRECISION


class NotInvertibleError(BorcherdsError, ZeroDivisionError):
    """The leading coefficient of a series is not a unit of its ring."""


class PreconditionError(BorcherdsError, ValueError):
    """An argument violates the documented preconditions of an operation."""

    exit_code = EXIT_USAGE


class PrecisionError(BorcherdsError):
    """Not enough coefficients (or digits) are available for the request."""

    exit_code = EXIT_PRECISION


class RecognitionError(PrecisionError):
    """A floating-point value could not be recognised as an exact number."""


class IntegralityError(BorcherdsError, ArithmeticError):
    """A quantity that must be integral came out fractional."""


class GenusSearchError(BorcherdsError):
    """No represented value coprime to the twist was found in the search box."""


class ConsistencyError(BorcherdsError, AssertionError):
    """Two independent computations of the same object disagree."""

    exit_code = EXIT_IDENTITY


class CacheError(BorcherdsError, OSError):
    """The coefficient cache could not be read or written."""
