"""Complete-data confidence intervals for a single binomial proportion."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dist import beta_quantile, normal_quantile


@dataclass(frozen=True)
class IntervalEstimate:
    """Point estimate with lower/upper bounds.

    Bounds are never clamped to [0, 1]: Wald-type intervals can and do
    spill past the unit interval in the high-efficacy regime, and the
    reported lengths must reflect that.
    """

    estimate: float
    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not self.lower <= self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if not 0.0 <= self.estimate <= 1.0:
            raise ValueError(f"estimate {self.estimate} outside [0, 1]")

    @property
    def length(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def _check_counts(y: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if y < 0 or y > n:
        raise ValueError(f"successes must lie in [0, n], got y={y}, n={n}")


@lru_cache(maxsize=512)
def cp_table(n: int, alpha: float = 0.05) -> tuple[np.ndarray, np.ndarray]:
    """Two-sided Clopper-Pearson bounds for every y in 0..n.

    Returned arrays are read-only and indexed by the success count; the
    simulation looks bounds up here instead of re-inverting the Beta CDF.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    y = np.arange(n + 1, dtype=float)
    lo = np.zeros(n + 1)
    hi = np.ones(n + 1)
    lo[1:] = beta_quantile(alpha / 2, y[1:], n - y[1:] + 1)
    hi[:-1] = beta_quantile(1 - alpha / 2, y[:-1] + 1, n - y[:-1])
    lo.flags.writeable = False
    hi.flags.writeable = False
    return lo, hi


def cp_bounds(y, n: int, alpha: float = 0.05) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised Clopper-Pearson lookup for an array of counts out of ``n``."""
    lo, hi = cp_table(int(n), float(alpha))
    y = np.asarray(y)
    return lo[y], hi[y]


def clopper_pearson(y: int, n: int, alpha: float = 0.05) -> IntervalEstimate:
    _check_counts(y, n)
    lo, hi = cp_table(int(n), float(alpha))
    return IntervalEstimate(y / n, float(lo[y]), float(hi[y]))


def one_sided_lower(y: int, n: int, alpha: float = 0.05) -> float:
    """Exact one-sided (1 - alpha) lower confidence bound."""
    _check_counts(y, n)
    if y == 0:
        return 0.0
    return float(beta_quantile(alpha, y, n - y + 1))


def wald_interval(center: float, variance: float, quantile: float) -> IntervalEstimate:
    if variance < 0:
        raise ValueError(f"variance must be nonnegative, got {variance}")
    half = quantile * np.sqrt(variance)
    return IntervalEstimate(center, center - half, center + half)


def wilson_roots(mean, n_eff, z):
    """Both roots in p of (mean - p)^2 = z^2 p (1 - p) / n_eff. Broadcasts."""
    mean = np.asarray(mean, dtype=float)
    k = z * z / n_eff
    center = mean + k / 2
    # max(.., 0) guards tiny negative round-off when mean is 0 or 1;
    # a vanishing n_eff overflows k, and the clip below maps that to [0, 1]
    with np.errstate(over="ignore", invalid="ignore"):
        disc = np.sqrt(np.maximum(k * mean * (1 - mean) + k * k / 4, 0.0))
        lo = (center - disc) / (1 + k)
        hi = (center + disc) / (1 + k)
    lo = np.where(np.isnan(lo), 0.0, lo)
    hi = np.where(np.isnan(hi), 1.0, hi)
    return np.clip(lo, 0.0, 1.0), np.clip(hi, 0.0, 1.0)


def effective_sample_size(mean, total_variance, n):
    """n-tilde = mean (1 - mean) / T, falling back to ``n`` at mean 0 or 1."""
    mean = np.asarray(mean, dtype=float)
    total_variance = np.asarray(total_variance, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        ne = mean * (1 - mean) / total_variance
    degenerate = (mean <= 0) | (mean >= 1) | ~np.isfinite(ne) | (ne <= 0)
    return np.where(degenerate, n, ne)


def wilson_from_moments(
    mean: float,
    total_variance: float,
    n: int,
    alpha: float = 0.05,
    quantile: float | None = None,
) -> IntervalEstimate:
    """Wilson score interval driven by a mean and a (pooled) variance.

    The variance enters through an effective sample size, so complete
    data (T = mean(1-mean)/n) gives back the textbook Wilson interval.
    ``quantile`` overrides the default normal critical value, e.g. with
    a t quantile carrying multiple-imputation degrees of freedom.
    """
    if not 0.0 <= mean <= 1.0:
        raise ValueError(f"mean must lie in [0, 1], got {mean}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    z = normal_quantile(1 - alpha / 2) if quantile is None else quantile
    ne = effective_sample_size(mean, total_variance, n)
    lo, hi = wilson_roots(mean, ne, z)
    return IntervalEstimate(float(mean), float(lo), float(hi))
