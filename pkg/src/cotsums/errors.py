"""Exception types shared across the package.

All exceptions derive from CotsumsError (a ValueError), so callers may catch
either the specific class or the common base.
"""
from __future__ import annotations

__all__ = [
    "CotsumsError",
    "ZeroConstantTerm",
    "NonzeroInnerConstant",
    "PoleAtOrigin",
    "TooLarge",
    "BadDimension",
    "NonRealTrace",
    "SingularAlpha",
    "BadK",
    "BadN",
    "ParityMismatch",
]


class CotsumsError(ValueError):
    """Base class for all input/consistency errors raised by this package."""


class ZeroConstantTerm(CotsumsError):
    """Series division requires an invertible (nonzero) constant term."""


class NonzeroInnerConstant(CotsumsError):
    """Series composition requires the inner series to vanish at 0."""


class PoleAtOrigin(CotsumsError):
    """Rational-function expansion requires the denominator nonzero at 0."""


class TooLarge(CotsumsError):
    """Requested enumeration exceeds the hard-coded size guard."""


class BadDimension(CotsumsError):
    """Matrix dimension must be a positive integer."""


class NonRealTrace(CotsumsError):
    """A trace expected to be real came out with a nonzero imaginary part."""


class SingularAlpha(CotsumsError):
    """The angle is (numerically) a multiple of pi, where cot diverges."""


class BadK(CotsumsError):
    """Index k outside its permitted range."""


class BadN(CotsumsError):
    """Argument n outside its permitted range."""


class ParityMismatch(CotsumsError):
    """Two arguments were required to have equal parity but do not."""
