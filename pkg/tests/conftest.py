"""Shared fixtures and an independent confidence-interval oracle.

The oracle rebuilds every quantity from scratch on top of scipy
primitives (brentq for the multiplier, chi2.ppf for the critical value,
a dense grid plus brentq refinement for the endpoints), so it shares no
algorithmic path with the library's Newton/bisection machinery.
"""
from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.optimize import brentq
from scipy.stats import chi2


def oracle_quantile_index(n: int, t: float) -> int:
    return min(max(math.ceil(round(n * t, 9)), 1), n)


def oracle_log_ratio(V: np.ndarray, theta: float, kind: str, n: int) -> float:
    """Log-likelihood ratio of any calibration, via scipy's brentq."""
    w = V - theta
    if kind in ("ael", "tael"):
        a = max(1.0, 0.5 * math.log(n))
        w = np.append(w, -a * w.mean())
    if not w.any():
        return 0.0
    if w.min() >= 0.0 or w.max() <= 0.0:
        return math.inf
    lo = -1.0 / w.max()
    hi = -1.0 / w.min()
    span = hi - lo
    g = lambda lam: float(np.mean(w / (1.0 + lam * w)))
    lam = brentq(g, lo + 1e-11 * span, hi - 1e-11 * span, xtol=1e-300, rtol=1e-15,
                 maxiter=300)
    val = max(2.0 * float(np.sum(np.log1p(lam * w))), 0.0)
    if kind in ("tel", "tael"):
        val = val * max(1.0 - val / n, 0.5)
    return val


def oracle_ci(values, t: float, alpha: float, kind: str = "el",
              points: int = 4097) -> tuple[float, float]:
    """Endpoints of the scaled-ratio confidence set, grid + brentq."""
    x = np.sort(np.asarray(values, dtype=float))
    n = x.size
    psi = x[oracle_quantile_index(n, t) - 1]
    V = np.where(x <= psi, x, 0.0)
    theta_hat = V.sum() / n
    shifted = np.where(x <= psi, x - psi, 0.0)
    ratio = V.var() / shifted.var()
    crit = float(chi2.ppf(1.0 - alpha, 1))
    hull_w = V.max() - V.min()
    if kind in ("el", "tel"):
        dom = (V.min() + 1e-12 * hull_w, V.max() - 1e-12 * hull_w)
    else:
        dom = (theta_hat - 10.0 * hull_w, theta_hat + 10.0 * hull_w)

    def f(th: float) -> float:
        val = oracle_log_ratio(V, th, kind, n)
        return (ratio * val - crit) if math.isfinite(val) else math.inf

    grid = np.linspace(dom[0], dom[1], points)
    vals = np.array([f(th) for th in grid])
    inside = np.flatnonzero(vals <= 0.0)
    assert inside.size > 0, "oracle grid saw no acceptance region"
    i_lo, i_hi = int(inside[0]), int(inside[-1])
    if i_lo > 0 and math.isfinite(vals[i_lo - 1]):
        lower = brentq(f, grid[i_lo - 1], grid[i_lo], xtol=1e-14, maxiter=300)
    elif i_lo > 0:  # +inf just outside: bisect the finite/infinite boundary
        lower = _edge_bisect(f, grid[i_lo - 1], grid[i_lo])
    else:
        lower = grid[0]
    if i_hi < points - 1 and math.isfinite(vals[i_hi + 1]):
        upper = brentq(f, grid[i_hi], grid[i_hi + 1], xtol=1e-14, maxiter=300)
    elif i_hi < points - 1:
        upper = _edge_bisect(f, grid[i_hi + 1], grid[i_hi])
    else:
        upper = grid[-1]
    return float(lower), float(upper)


def _edge_bisect(f, bad: float, good: float) -> float:
    for _ in range(200):
        if abs(bad - good) <= 1e-13 * max(1.0, abs(good)):
            break
        mid = 0.5 * (bad + good)
        if f(mid) <= 0.0:
            good = mid
        else:
            bad = mid
    return good


def random_positive_data(rng: np.random.Generator, n: int) -> np.ndarray:
    """Income-like draws from one of three right-skewed shapes."""
    which = int(rng.integers(0, 3))
    if which == 0:
        return rng.weibull(1.5, n) * 2.0
    if which == 1:
        return rng.chisquare(3.0, n)
    return rng.lognormal(0.5, 0.6, n)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260819)
