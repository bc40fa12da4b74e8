"""Adjusted and transformed calibrations of the EL log-ratio.

Three modifications of the plain empirical log-likelihood ratio improve
small-sample interval behaviour:

* AEL appends one pseudo-deviation ``-a_n * mean(w)`` before profiling,
  which keeps zero inside the hull for every finite theta and bounds the
  ratio, at the cost of some over-coverage for large ratios.
* TEL damps large plain ratios through ``l * max(1 - l/n, 1 - gamma)``.
* TAEL applies the same damping to the adjusted ratio (divisor is the
  original n, not n + 1).
"""
from __future__ import annotations

import math

import numpy as np

from .core import LogRatioValue, Sample, VariantKind, _profile_value, estimating_values
from .errors import DomainError

__all__ = [
    "adjustment_factor",
    "ael_augment",
    "log_ael_ratio",
    "tel_transform",
    "log_tael_ratio",
    "log_ratio",
]


def adjustment_factor(n: int) -> float:
    """AEL pseudo-observation scale a_n = max(1, log(n)/2)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return max(1.0, 0.5 * math.log(n))


def ael_augment(w, a: float) -> np.ndarray:
    """Append the balancing pseudo-deviation -a * mean(w) to w."""
    w = np.asarray(w, dtype=float).ravel()
    return np.append(w, -a * float(np.mean(w)))


def _ael_value(w: np.ndarray, lam0: float | None = None) -> tuple[float, float]:
    if not w.any():
        return 0.0, 0.0
    aug = ael_augment(w, adjustment_factor(w.size))
    return _profile_value(aug, lam0=lam0)


def log_ael_ratio(s: Sample, t: float, theta: float) -> LogRatioValue:
    """Adjusted empirical log-likelihood ratio at a candidate ordinate.

    Finite for every finite ``theta``: whenever the deviations are not all
    zero, the pseudo-deviation sits on the opposite side of zero from
    their mean, so the hull condition always holds.
    """
    ev = estimating_values(s, t, theta)
    val, _ = _ael_value(ev.deviations)
    return LogRatioValue(value=val, kind=VariantKind.AEL)


def tel_transform(l: float, n: int, gamma: float = 0.5) -> float:
    """Damped ratio l * max(1 - l/n, 1 - gamma).

    Increasing and continuous in l; equals the identity at l = 0 and
    slope-(1 - gamma) linear growth past the kink at l = n*gamma.
    """
    if l < 0.0:
        raise DomainError(f"log-ratio must be nonnegative, got {l}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not 0.0 <= gamma <= 1.0:
        raise DomainError(f"gamma must lie in [0, 1], got {gamma}")
    return l * max(1.0 - l / n, 1.0 - gamma)


def log_tael_ratio(s: Sample, t: float, theta: float, gamma: float = 0.5) -> LogRatioValue:
    """Transformed adjusted ratio: tel_transform of the AEL ratio.

    The damping divisor is the original sample size n, not the augmented
    n + 1.
    """
    ev = estimating_values(s, t, theta)
    val, _ = _ael_value(ev.deviations)
    return LogRatioValue(value=tel_transform(val, s.n, gamma), kind=VariantKind.TAEL)


def log_ratio(kind: VariantKind, s: Sample, t: float, theta: float,
              gamma: float = 0.5) -> LogRatioValue:
    """Dispatch to the requested calibration of the log-likelihood ratio."""
    kind = VariantKind(kind)
    ev = estimating_values(s, t, theta)
    if kind in (VariantKind.EL, VariantKind.TEL):
        val, _ = _profile_value(ev.deviations)
        if kind is VariantKind.TEL:
            val = tel_transform(val, s.n, gamma)
    else:
        val, _ = _ael_value(ev.deviations)
        if kind is VariantKind.TAEL:
            val = tel_transform(val, s.n, gamma)
    return LogRatioValue(value=val, kind=kind)
