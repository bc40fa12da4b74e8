"""Exception hierarchy for empirical-likelihood Lorenz inference."""
from __future__ import annotations


class LorenzELError(Exception):
    """Base class for all errors raised by this package."""


class ConvexHullViolation(LorenzELError):
    """Zero is not an interior point of the convex hull of the
    estimating values, so the constrained likelihood has no solution."""


class NonFinite(LorenzELError):
    """A computation produced (or received) a non-finite value."""


class DegenerateVariance(LorenzELError):
    """The plug-in variance of the centered truncated values is zero;
    the scale factor and hence the confidence interval are undefined."""


class BracketFailure(LorenzELError):
    """The scaled statistic never crossed the critical threshold inside
    the search domain.

    The partially constructed interval (with the offending endpoint
    clamped to the domain boundary and its ``bracketed`` flag cleared)
    is attached as the ``interval`` attribute.
    """

    def __init__(self, message: str, interval=None):
        super().__init__(message)
        self.interval = interval


class QuadratureFailure(LorenzELError):
    """Numerical integration did not reach the requested accuracy."""


class DomainError(LorenzELError, ValueError):
    """A scalar argument lies outside its mathematical domain."""


class FileError(LorenzELError):
    """An input file could not be read."""


class SchemaError(LorenzELError):
    """An input table is missing a required column."""
