"""Chi-square calibration of the log-likelihood ratio.

The quantile is estimated jointly with the partial mean, so the plain
ratio is not asymptotically chi-square(1); it must be multiplied by the
variance ratio sigma_p^2 / sigma_v^2 of two plug-in moments.  The scaled
statistic is then compared against the chi-square(1) critical value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .core import Sample, VariantKind, sample_quantile
from .errors import DegenerateVariance, DomainError
from .variants import log_ratio

__all__ = [
    "ScaleFactor",
    "SignificanceLevel",
    "scale_factor",
    "chi2_crit",
    "scaled_statistic",
]


@dataclass(frozen=True)
class ScaleFactor:
    """Plug-in variances of the two influence terms and their ratio."""

    sigma_p_sq: float
    sigma_v_sq: float
    ratio: float


@dataclass(frozen=True)
class SignificanceLevel:
    """Significance level alpha with its chi-square(1) critical value.

    ``chi2_crit`` may be supplied explicitly but must then agree with the
    derived value to 1e-9.
    """

    alpha: float
    chi2_crit: float | None = None

    def __post_init__(self) -> None:
        crit = chi2_crit(self.alpha)
        if self.chi2_crit is None:
            object.__setattr__(self, "chi2_crit", crit)
        elif abs(self.chi2_crit - crit) > 1e-9:
            raise DomainError(
                f"chi2_crit {self.chi2_crit!r} does not match alpha={self.alpha}"
                f" (expected {crit!r})"
            )

    @property
    def level(self) -> float:
        """Nominal coverage 1 - alpha."""
        return 1.0 - self.alpha


def chi2_crit(alpha: float) -> float:
    """Upper-alpha critical value of chi-square with one degree of freedom.

    Computed as the square of the standard-normal quantile at 1 - alpha/2,
    which is exact for one degree of freedom.
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return float(ndtri(1.0 - 0.5 * alpha)) ** 2


def scale_factor(s: Sample, t: float) -> ScaleFactor:
    """Variance ratio restoring the chi-square(1) limit.

    sigma_p^2 is the plug-in variance of X 1(X <= psi_hat) and sigma_v^2
    that of (X - psi_hat) 1(X <= psi_hat), both with divisor n.  Raises
    DegenerateVariance when sigma_v^2 vanishes (for example, a single
    observation at or below the quantile, or all included values tied at
    it), in which case no interval exists.
    """
    psi = sample_quantile(s, t)
    x = s.values
    below = x <= psi
    trunc = np.where(below, x, 0.0)
    shifted = np.where(below, x - psi, 0.0)
    sigma_p_sq = float(trunc.var())
    sigma_v_sq = float(shifted.var())
    if sigma_v_sq <= 0.0 or not math.isfinite(sigma_v_sq):
        raise DegenerateVariance(
            f"variance of the shifted truncated values is {sigma_v_sq:g}; "
            "the scale factor is undefined"
        )
    return ScaleFactor(sigma_p_sq=sigma_p_sq, sigma_v_sq=sigma_v_sq,
                       ratio=sigma_p_sq / sigma_v_sq)


def scaled_statistic(kind: VariantKind, s: Sample, t: float, theta: float,
                     gamma: float = 0.5) -> float:
    """Variance-ratio-scaled log-likelihood ratio, asymptotically chi2(1)."""
    sf = scale_factor(s, t)
    return sf.ratio * log_ratio(kind, s, t, theta, gamma=gamma).value
