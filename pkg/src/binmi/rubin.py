"""Rubin's combining rules for a scalar estimand, with small-sample df.

All functions accept plain floats or numpy arrays; :func:`pool_arrays`
pools along the last axis so that a whole batch of replicates, each with
D imputations, is combined in one call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class ImputedDraws:
    estimates: Sequence[float]
    within_variances: Sequence[float]

    def __post_init__(self) -> None:
        if len(self.estimates) != len(self.within_variances):
            raise ValueError(
                f"length mismatch: {len(self.estimates)} estimates vs "
                f"{len(self.within_variances)} within-variances"
            )
        if len(self.estimates) < 2:
            raise ValueError("at least two imputations are required")
        if np.any(np.asarray(self.within_variances) < 0):
            raise ValueError("within-imputation variances must be nonnegative")

    @property
    def D(self) -> int:
        return len(self.estimates)


@dataclass(frozen=True)
class PooledResult:
    mean: float
    within: float
    between: float
    total: float
    df: float


def rubin_df(D, within, between):
    """Rubin (1987) df, (D-1)(1 + W / ((1+1/D) B))^2; infinite when B = 0."""
    between = np.asarray(between, dtype=float)
    inflated = (1 + 1 / D) * between
    with np.errstate(divide="ignore", invalid="ignore"):
        df = (D - 1) * (1 + within / inflated) ** 2
    df = np.where(between > 0, df, np.inf)
    return df if df.ndim else float(df)


def barnard_rubin_df(D, within, between, n_complete, floor: float = 1.0):
    """Barnard-Rubin (1999) small-sample degrees of freedom.

    ``n_complete`` is the complete-data sample size; the complete-data df
    is taken as ``n_complete - 1``. The result is floored at ``floor`` so
    a t quantile always exists when nearly all information is missing.
    """
    if np.any(np.asarray(n_complete) < 2):
        raise ValueError("n_complete must be at least 2")
    within = np.asarray(within, dtype=float)
    between = np.asarray(between, dtype=float)
    nu_com = np.asarray(n_complete, dtype=float) - 1
    inflated = (1 + 1 / D) * between
    total = within + inflated
    with np.errstate(divide="ignore", invalid="ignore"):
        gamma = np.where(total > 0, inflated / total, 0.0)
        nu_obs = (nu_com + 1) / (nu_com + 3) * nu_com * (1 - gamma)
        nu_m = np.where(gamma > 0, (D - 1) / gamma**2, np.inf)
        nu = np.where(
            gamma > 0,
            1 / (1 / nu_m + 1 / np.where(nu_obs > 0, nu_obs, np.nan)),
            nu_obs,
        )
    # gamma == 1 (no within variance) drives nu_obs to 0: nan -> floor
    nu = np.where(np.isnan(nu), floor, np.maximum(nu, floor))
    return nu if nu.ndim else float(nu)


def pool_arrays(estimates, within_variances, inflate_between: bool = True):
    """Combine along the last axis. Returns (mean, within, between, total)."""
    est = np.asarray(estimates, dtype=float)
    var = np.asarray(within_variances, dtype=float)
    D = est.shape[-1]
    mean = est.mean(axis=-1)
    within = var.mean(axis=-1)
    between = est.var(axis=-1, ddof=1)
    factor = 1 + 1 / D if inflate_between else 1.0
    total = within + factor * between
    return mean, within, between, total


def pool(draws: ImputedDraws, inflate_between: bool = True) -> PooledResult:
    """Rubin's rules for one set of D completed-data analyses.

    With ``inflate_between`` the between-imputation variance carries the
    usual (1 + 1/D) factor; without it the total is the bare W + B sum.
    The reported df is Rubin's large-sample value.
    """
    mean, within, between, total = pool_arrays(
        draws.estimates, draws.within_variances, inflate_between
    )
    return PooledResult(
        mean=float(mean),
        within=float(within),
        between=float(between),
        total=float(total),
        df=rubin_df(draws.D, float(within), float(between)),
    )
