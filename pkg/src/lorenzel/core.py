"""Empirical-likelihood core for generalized Lorenz ordinates.

The cumulative income below the t-th quantile, theta(t) = E[X 1(X <= psi_t)],
is estimated from a sorted sample, and candidate values of theta are
profiled through the empirical likelihood: observation weights p_i maximize
prod(p_i) subject to sum(p_i) = 1 and sum(p_i * W_i) = 0, where
W_i = X_i 1(X_i <= psi_hat) - theta.  The inner maximization reduces to a
one-dimensional root-find for the Lagrange multiplier lambda.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConvexHullViolation, DomainError, NonFinite

__all__ = [
    "Sample",
    "VariantKind",
    "EstimatingValues",
    "LagrangeSolution",
    "LogRatioValue",
    "sample_quantile",
    "point_estimate",
    "truncated_values",
    "estimating_values",
    "solve_lambda",
    "log_el_ratio",
]


class VariantKind(str, Enum):
    """The four log-likelihood-ratio calibrations."""

    EL = "el"
    AEL = "ael"
    TEL = "tel"
    TAEL = "tael"


class Sample:
    """Immutable, ascending-sorted view of real-valued observations.

    Input order is irrelevant; values are copied, sorted, and locked.
    Requires at least two finite observations.  Negative values are
    allowed (e.g. skew-normal populations produce them).
    """

    __slots__ = ("_values",)

    def __init__(self, values) -> None:
        arr = np.asarray(values, dtype=float).ravel().copy()
        if arr.size < 2:
            raise ValueError(f"need at least 2 observations, got {arr.size}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("all observations must be finite")
        arr.sort()
        arr.flags.writeable = False
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        """Read-only array of observations, sorted ascending."""
        return self._values

    @property
    def n(self) -> int:
        return self._values.size

    def __len__(self) -> int:
        return self._values.size

    def __repr__(self) -> str:
        return f"Sample(n={self.n}, min={self._values[0]:g}, max={self._values[-1]:g})"


@dataclass(frozen=True)
class EstimatingValues:
    """Truncated observations and their deviations at a candidate theta."""

    quantile: float
    theta: float
    truncated: np.ndarray
    deviations: np.ndarray


@dataclass(frozen=True)
class LagrangeSolution:
    """Root of the weight-constraint equation.

    ``lam`` solves mean(w / (1 + lam*w)) = 0; ``weights`` are the implied
    probabilities 1 / (m * (1 + lam*w)); ``residual`` is the equation value
    at the returned root.
    """

    lam: float
    weights: np.ndarray
    residual: float


@dataclass(frozen=True)
class LogRatioValue:
    """A nonnegative log-likelihood-ratio and the calibration that produced it."""

    value: float
    kind: VariantKind


def _check_t(t: float) -> float:
    t = float(t)
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in (0, 1), got {t}")
    return t


def sample_quantile(s: Sample, t: float) -> float:
    """t-th sample quantile: the smallest x with empirical CDF(x) >= t.

    Left-continuous (type 1) definition: the ceil(n*t)-th order statistic.
    No interpolation.
    """
    t = _check_t(t)
    # round kills float dust in n*t so exact multiples land on their integer
    k = math.ceil(round(s.n * t, 9))
    k = min(max(k, 1), s.n)
    return float(s.values[k - 1])


def truncated_values(s: Sample, t: float) -> np.ndarray:
    """V_i = X_i 1(X_i <= quantile); ties at the quantile are all included."""
    psi = sample_quantile(s, t)
    return np.where(s.values <= psi, s.values, 0.0)


def point_estimate(s: Sample, t: float) -> float:
    """Empirical generalized Lorenz ordinate: mean of the truncated values.

    This is the unique theta at which the log-likelihood ratio vanishes.
    """
    return float(truncated_values(s, t).sum() / s.n)


def estimating_values(s: Sample, t: float, theta: float) -> EstimatingValues:
    """Quantile, truncated values, and deviations W_i = V_i - theta."""
    psi = sample_quantile(s, t)
    trunc = np.where(s.values <= psi, s.values, 0.0)
    return EstimatingValues(
        quantile=psi, theta=float(theta), truncated=trunc,
        deviations=trunc - theta,
    )


def solve_lambda(w, lam0: float | None = None) -> LagrangeSolution:
    """Solve mean(w / (1 + lam*w)) = 0 for the Lagrange multiplier.

    Parameters
    ----------
    w : array_like
        Deviation vector.  Zero must be an interior point of its convex
        hull, i.e. w must contain a strictly negative and a strictly
        positive entry.
    lam0 : float, optional
        Warm-start guess; ignored when it falls outside the admissible
        bracket.

    Returns
    -------
    LagrangeSolution
        The unique root in the open bracket (-1/max(w), -1/min(w)),
        together with the implied probability weights and the residual.

    Raises
    ------
    ConvexHullViolation
        If all entries share a sign (zeros included on the boundary).
    NonFinite
        On non-finite input or internal overflow.

    Notes
    -----
    The objective is strictly decreasing on the bracket, so a sign-change
    bracket always exists; Newton steps are taken when they stay inside
    the current bracket and bisection otherwise.  Iteration stops when
    |residual| <= 1e-13 * mean|w| (comfortably below the contractual
    1e-10 * (1 + max|w|)) *and* |lam * residual| <= 2.5e-13 — the latter
    because sum(weights) - 1 equals -lam * residual identically, so the
    weights sum to one only as tightly as that product is driven down —
    or when the bracket width falls below 1e-14.
    """
    w = np.asarray(w, dtype=float).ravel()
    if w.size == 0:
        raise ValueError("empty deviation vector")
    if not np.all(np.isfinite(w)):
        raise NonFinite("deviation vector contains non-finite entries")
    wmin = float(w.min())
    wmax = float(w.max())
    if not (wmin < 0.0 < wmax):
        raise ConvexHullViolation(
            "zero is not interior to the convex hull of the deviations "
            f"(min={wmin:g}, max={wmax:g})"
        )
    m = w.size
    lo = -1.0 / wmax
    hi = -1.0 / wmin
    eps = 1e-12 * (hi - lo)
    lo += eps
    hi -= eps

    target = 1e-13 * float(np.mean(np.abs(w)))
    lam = 0.0
    if lam0 is not None and lo < lam0 < hi:
        lam = float(lam0)
    if not lo < lam < hi:  # extreme one-sided brackets may exclude 0
        lam = 0.5 * (lo + hi)

    g = math.inf
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(200):
            r = w / (1.0 + lam * w)
            g = float(np.mean(r))
            if not math.isfinite(g):
                raise NonFinite("estimating equation overflowed")
            if abs(g) <= target and abs(lam * g) <= 2.5e-13:
                break
            if g > 0.0:
                lo = lam
            else:
                hi = lam
            if hi - lo <= 1e-14:
                break
            slope = -float(np.mean(r * r))
            step = lam - g / slope if slope < 0.0 and math.isfinite(slope) else math.inf
            lam = step if lo < step < hi else 0.5 * (lo + hi)

    weights = 1.0 / (m * (1.0 + lam * w))
    return LagrangeSolution(lam=lam, weights=weights, residual=g)


def _profile_value(w: np.ndarray, lam0: float | None = None) -> tuple[float, float]:
    """Log-ratio 2*sum(log(1 + lam*w)) for a deviation vector, with its lam.

    All-zero deviations satisfy the constraint with uniform weights, so the
    ratio is 0 by convention.
    """
    if not w.any():
        return 0.0, 0.0
    sol = solve_lambda(w, lam0=lam0)
    val = 2.0 * float(np.sum(np.log1p(sol.lam * w)))
    return max(val, 0.0), sol.lam


def log_el_ratio(s: Sample, t: float, theta: float) -> LogRatioValue:
    """Profile empirical log-likelihood ratio at a candidate ordinate value.

    Nonnegative, zero exactly at ``point_estimate(s, t)``.  Raises
    ConvexHullViolation when theta lies outside the open hull of the
    truncated values.
    """
    ev = estimating_values(s, t, theta)
    val, _ = _profile_value(ev.deviations)
    return LogRatioValue(value=val, kind=VariantKind.EL)
