"""The eleven missing-data estimators for a single-arm binary endpoint.

Every estimator is written once, batched: it takes integer arrays
``y, f, m`` (observed successes, observed failures, missing) of shape
``(R,)`` and returns ``(estimate, lower, upper)`` arrays of shape
``(R,)``, with NaN marking replicates where the method is undefined.
The single-dataset functions (``wald_mi`` and friends) are thin
wrappers over a batch of one; the simulation calls the batch kernels
directly through :func:`run_batch`.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np
from scipy import special

from .dist import (
    normal_quantile,
    sample_beta,
    sample_beta_binomial,
    sample_beta_binomial_inverse,
    sample_binomial,
    student_t_quantile,
)
from .intervals import IntervalEstimate, cp_table, effective_sample_size, wilson_roots
from .rubin import barnard_rubin_df, pool_arrays, rubin_df

log = logging.getLogger(__name__)


class NoObservedData(ValueError):
    """The method needs at least one observed outcome and there is none."""


class MethodId(str, enum.Enum):
    COMPLETE_CASE = "complete-case"
    IMPUTE_SUCCESS = "impute-success"
    IMPUTE_FAILURE = "impute-failure"
    WALD_MI = "wald-mi"
    WILSON_MI = "wilson-mi"
    LOGODDS_MI = "logodds-mi"
    BOOTSTRAP = "bootstrap"
    JACKKNIFE = "jackknife"
    MODIFIED_CPMI = "modified-cpmi"
    FULL_BAYES = "full-bayes"
    BETA_MI = "beta-mi"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def stochastic(self) -> bool:
        return self not in (
            MethodId.COMPLETE_CASE,
            MethodId.IMPUTE_SUCCESS,
            MethodId.IMPUTE_FAILURE,
        )

    @classmethod
    def parse(cls, text: str) -> "MethodId":
        key = text.strip().lower().replace("_", "-")
        for m in cls:
            if key in (m.value, m.name.lower().replace("_", "-")):
                return m
        raise ValueError(
            f"unknown method {text!r}; expected one of {', '.join(m.value for m in cls)}"
        )


_LABELS = {
    MethodId.COMPLETE_CASE: "a) Complete case",
    MethodId.IMPUTE_SUCCESS: "b) Impute as success",
    MethodId.IMPUTE_FAILURE: "c) Impute as failure",
    MethodId.WALD_MI: "d) Multiple imputation using Wald intervals",
    MethodId.WILSON_MI: "e) Multiple imputation using Wilson intervals",
    MethodId.LOGODDS_MI: "f) Multiple imputation using log-odds transformation",
    MethodId.BOOTSTRAP: "g) Bootstrap",
    MethodId.JACKKNIFE: "h) Jackknife",
    MethodId.MODIFIED_CPMI: "i) Modified Clopper-Pearson multiple imputation",
    MethodId.FULL_BAYES: "j) Fully Bayesian approach",
    MethodId.BETA_MI: "k) Multiple imputation using Beta distribution",
}

# order of the figure-4 forest plot
FOREST_METHODS = (
    MethodId.COMPLETE_CASE,
    MethodId.IMPUTE_FAILURE,
    MethodId.IMPUTE_SUCCESS,
    MethodId.WALD_MI,
    MethodId.MODIFIED_CPMI,
    MethodId.BETA_MI,
    MethodId.FULL_BAYES,
)


@dataclass(frozen=True)
class TrialData:
    y_obs: int
    f_obs: int
    n_miss: int

    def __post_init__(self) -> None:
        for name in ("y_obs", "f_obs", "n_miss"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.n < 1:
            raise ValueError("a dataset needs at least one subject")

    @property
    def n_obs(self) -> int:
        return self.y_obs + self.f_obs

    @property
    def n(self) -> int:
        return self.y_obs + self.f_obs + self.n_miss


@dataclass(frozen=True)
class PriorSpec:
    """Beta hyperparameters before (alpha_pre, beta_pre) and after imputation.

    The pre-imputation prior drives the posterior predictive draws of the
    missing outcomes; the post-imputation prior is used for the posterior
    of the success rate given the completed data. Defaults are Jeffreys.
    """

    alpha_pre: float = 0.5
    beta_pre: float = 0.5
    alpha_post: float = 0.5
    beta_post: float = 0.5

    def __post_init__(self) -> None:
        for name, v in asdict(self).items():
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"prior hyperparameter {name} must be positive, got {v!r}")

    @classmethod
    def uniform(cls) -> "PriorSpec":
        return cls(1.0, 1.0, 1.0, 1.0)

    @classmethod
    def jeffreys(cls) -> "PriorSpec":
        return cls(0.5, 0.5, 0.5, 0.5)

    @classmethod
    def parse(cls, text: str) -> "PriorSpec":
        parts = [float(p) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("prior needs four comma-separated values a,b,a',b'")
        return cls(*parts)


_CHOICES = {
    "cpmi_form": ("halfwidth", "bounds"),
    "cpmi_df": ("barnard-rubin", "rubin"),
    "wilson_within": ("binomial", "average"),
    "wilson_quantile": ("t", "normal"),
    "jackknife_imputation": ("per-subject", "once"),
    "jackknife_denominator": ("n-1", "n"),
    "beta_mi_estimates": ("draw", "mean"),
    "bayes_estimate": ("median", "mean"),
}


@dataclass(frozen=True)
class RunConfig:
    """Every tuning constant of the estimators.

    The string-valued fields select between readings of under-specified
    steps; see the README for what each alternative computes.
    """

    D: int = 50
    DD: int = 50
    M: int = 5000
    B_boot: int = 1000
    grid_step: float = 0.001
    alpha_level: float = 0.05
    seed: int = 20240607
    inflate_between: bool = True
    eq6_literal: bool = False
    cpmi_form: str = "halfwidth"
    cpmi_df: str = "rubin"
    wilson_within: str = "binomial"
    wilson_quantile: str = "t"
    jackknife_imputation: str = "per-subject"
    jackknife_denominator: str = "n-1"
    beta_mi_estimates: str = "draw"
    bayes_estimate: str = "median"

    def __post_init__(self) -> None:
        if self.D < 2 or self.DD < 2:
            raise ValueError("D and DD must be at least 2")
        if self.M < 100 or self.B_boot < 100:
            raise ValueError("M and B_boot must be at least 100")
        if not 0 < self.grid_step <= 0.01:
            raise ValueError("grid_step must lie in (0, 0.01]")
        cells = 1 / self.grid_step
        if abs(cells - round(cells)) > 1e-6:
            raise ValueError("grid_step must divide 1 evenly")
        if not 0 < self.alpha_level < 1:
            raise ValueError("alpha_level must lie in (0, 1)")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for name, allowed in _CHOICES.items():
            if getattr(self, name) not in allowed:
                raise ValueError(f"{name} must be one of {allowed}, got {getattr(self, name)!r}")

    @property
    def inflate(self) -> bool:
        return self.inflate_between and not self.eq6_literal

    def as_dict(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------------------
# shared pieces


def _cp_lookup(y, n, alpha):
    """Clopper-Pearson bounds for counts ``y`` out of ``n`` (n may vary by row)."""
    y = np.asarray(y)
    n = np.broadcast_to(np.asarray(n), y.shape)
    lo = np.full(y.shape, np.nan)
    hi = np.full(y.shape, np.nan)
    for nv in np.unique(n):
        if nv < 1:
            continue
        sel = n == nv
        tlo, thi = cp_table(int(nv), float(alpha))
        lo[sel] = tlo[y[sel]]
        hi[sel] = thi[y[sel]]
    return lo, hi


def _draw_missing(rng, y, f, m, prior, size):
    """Posterior predictive draws of the missing-success count, shape (R, size)."""
    y, f, m = (np.asarray(v)[:, None] for v in (y, f, m))
    R = y.shape[0]
    return sample_beta_binomial(rng, m, prior.alpha_pre + y, prior.beta_pre + f, size=(R, size))


def _critical(alpha):
    return normal_quantile(1 - alpha / 2)


def draw_imputation(rng: np.random.Generator, data: TrialData, prior: PriorSpec) -> int:
    """One draw of y_miss | y_obs ~ BetaBinomial(n_miss, a + y_obs, b + f_obs)."""
    return int(
        sample_beta_binomial(
            rng, data.n_miss, prior.alpha_pre + data.y_obs, prior.beta_pre + data.f_obs
        )
    )


# ---------------------------------------------------------------------------
# batch kernels: (rng, y, f, m, prior, cfg) -> (est, lo, hi)


def _complete_case(rng, y, f, m, prior, cfg):
    n_obs = y + f
    lo, hi = _cp_lookup(y, n_obs, cfg.alpha_level)
    with np.errstate(invalid="ignore", divide="ignore"):
        est = np.where(n_obs > 0, y / n_obs, np.nan)
    return est, lo, hi


def _impute_success(rng, y, f, m, prior, cfg):
    n = y + f + m
    lo, hi = _cp_lookup(y + m, n, cfg.alpha_level)
    return (y + m) / n, lo, hi


def _impute_failure(rng, y, f, m, prior, cfg):
    n = y + f + m
    lo, hi = _cp_lookup(y, n, cfg.alpha_level)
    return y / n, lo, hi


def _wald_mi(rng, y, f, m, prior, cfg):
    n = (y + f + m)[:, None]
    pd = (y[:, None] + _draw_missing(rng, y, f, m, prior, cfg.D)) / n
    mean, _, _, total = pool_arrays(pd, pd * (1 - pd) / n, cfg.inflate)
    half = _critical(cfg.alpha_level) * np.sqrt(total)
    return mean, mean - half, mean + half


def _wilson_mi(rng, y, f, m, prior, cfg):
    n = y + f + m
    pd = (y[:, None] + _draw_missing(rng, y, f, m, prior, cfg.D)) / n[:, None]
    mean, within, between, total = pool_arrays(pd, pd * (1 - pd) / n[:, None], cfg.inflate)
    if cfg.wilson_within == "binomial":
        # within-imputation variance from the pooled proportion itself
        within = mean * (1 - mean) / n
        factor = 1 + 1 / cfg.D if cfg.inflate else 1.0
        total = within + factor * between
    if cfg.wilson_quantile == "t":
        df = rubin_df(cfg.D, within, between)
        z = student_t_quantile(1 - cfg.alpha_level / 2, df)
    else:
        z = _critical(cfg.alpha_level)
    lo, hi = wilson_roots(mean, effective_sample_size(mean, total, n), z)
    return mean, lo, hi


def _logodds_mi(rng, y, f, m, prior, cfg):
    n = y + f + m
    s = (y[:, None] + _draw_missing(rng, y, f, m, prior, cfg.D)).astype(float)
    fl = n[:, None] - s
    # Haldane-Anscombe 0.5 correction only at the boundary counts
    edge = (s == 0) | (fl == 0)
    s = np.where(edge, s + 0.5, s)
    fl = np.where(edge, fl + 0.5, fl)
    theta = np.log(s / fl)
    mean, within, between, total = pool_arrays(theta, 1 / s + 1 / fl, cfg.inflate)
    df = barnard_rubin_df(cfg.D, within, between, np.maximum(n, 2))
    t = student_t_quantile(1 - cfg.alpha_level / 2, df)
    half = t * np.sqrt(total)
    return special.expit(mean), special.expit(mean - half), special.expit(mean + half)


def _bootstrap(rng, y, f, m, prior, cfg):
    n = (y + f + m)[:, None]
    R, B = y.shape[0], cfg.B_boot
    defined = (y + f) > 0
    ps = (y / (y + f + m))[:, None]
    with np.errstate(invalid="ignore", divide="ignore"):
        pf_rest = np.where(f + m > 0, f / (f + m), 0.0)[:, None]
    ns = sample_binomial(rng, n, ps, size=(R, B))
    nf = sample_binomial(rng, n - ns, pf_rest)
    # resamples without any observed subject are redrawn
    redo = ((ns + nf) == 0) & defined[:, None]
    while np.any(redo):
        rows = np.nonzero(redo)[0]
        ns_new = sample_binomial(rng, n[rows, 0], ps[rows, 0])
        nf_new = sample_binomial(rng, n[rows, 0] - ns_new, pf_rest[rows, 0])
        ns[redo] = ns_new
        nf[redo] = nf_new
        redo = ((ns + nf) == 0) & defined[:, None]
    nm = n - ns - nf
    with np.errstate(invalid="ignore", divide="ignore"):
        p_imp = np.where(ns + nf > 0, ns / (ns + nf), 0.0)
    pb = (ns + sample_binomial(rng, nm, p_imp)) / n
    a = cfg.alpha_level
    lo, hi = np.quantile(pb, [a / 2, 1 - a / 2], axis=1)
    est = pb.mean(axis=1)
    nan = np.where(defined, 0.0, np.nan)
    return est + nan, lo + nan, hi + nan


def _jackknife_one_n(rng, y, f, m, n, cfg):
    R = y.shape[0]
    n_obs = y + f
    if cfg.jackknife_imputation == "once":
        with np.errstate(invalid="ignore", divide="ignore"):
            p_imp = np.where(n_obs > 0, y / np.maximum(n_obs, 1), 0.0)
        Y = y + sample_binomial(rng, m, p_imp)
        j = np.arange(n)[None, :]
        succ = (j < Y[:, None]).astype(float)
        num = Y[:, None] - succ
        defined = n_obs > 0
    else:
        j = np.arange(n)[None, :]
        is_s = j < y[:, None]
        is_f = (j >= y[:, None]) & (j < n_obs[:, None])
        is_m = j >= n_obs[:, None]
        yj = y[:, None] - is_s
        oj = n_obs[:, None] - is_s - is_f
        mj = m[:, None] - is_m
        with np.errstate(invalid="ignore", divide="ignore"):
            p_imp = np.where(oj > 0, yj / np.maximum(oj, 1), 0.0)
        num = yj + sample_binomial(rng, mj, p_imp, size=(R, n))
        # leaving out the only observed subject leaves nothing to impute from
        defined = np.all((oj > 0) | (mj == 0), axis=1) & (n_obs > 0)
    denom = n - 1 if cfg.jackknife_denominator == "n-1" else n
    loo = num / max(denom, 1)
    est = loo.mean(axis=1)
    var = (n - 1) / n * ((loo - est[:, None]) ** 2).sum(axis=1)
    half = _critical(cfg.alpha_level) * np.sqrt(var)
    nan = np.where(defined, 0.0, np.nan)
    return est + nan, est - half + nan, est + half + nan


def _jackknife(rng, y, f, m, prior, cfg):
    n = y + f + m
    est = np.full(y.shape, np.nan)
    lo = est.copy()
    hi = est.copy()
    for nv in np.unique(n):
        sel = n == nv
        if nv < 2:
            continue
        est[sel], lo[sel], hi[sel] = _jackknife_one_n(rng, y[sel], f[sel], m[sel], int(nv), cfg)
    return est, lo, hi


def _df(cfg, within, between, n):
    if cfg.cpmi_df == "rubin":
        return rubin_df(cfg.D, within, between)
    return barnard_rubin_df(cfg.D, within, between, np.maximum(n, 2))


def _modified_cpmi(rng, y, f, m, prior, cfg):
    n = y + f + m
    R = y.shape[0]
    yd = y[:, None] + _draw_missing(rng, y, f, m, prior, cfg.D)
    pd = yd / n[:, None]
    lb, ub = _cp_lookup(yd, n[:, None], cfg.alpha_level)
    # parametric bootstrap: DD fresh samples of size n at each imputed rate
    ys = sample_binomial(rng, n[:, None, None], pd[:, :, None], size=(R, cfg.D, cfg.DD))
    lbs, ubs = _cp_lookup(ys, n[:, None, None], cfg.alpha_level)
    if cfg.cpmi_form == "halfwidth":
        ps = ys / n[:, None, None]
        lb, ub = pd - lb, ub - pd
        lbs, ubs = ps - lbs, ubs - ps
    v_lb = lbs.var(axis=-1, ddof=1)
    v_ub = ubs.var(axis=-1, ddof=1)
    m_lb, w_lb, b_lb, t_lb = pool_arrays(lb, v_lb, cfg.inflate)
    m_ub, w_ub, b_ub, t_ub = pool_arrays(ub, v_ub, cfg.inflate)
    q = 1 - cfg.alpha_level / 2
    tv_lb = student_t_quantile(q, _df(cfg, w_lb, b_lb, n))
    tv_ub = student_t_quantile(q, _df(cfg, w_ub, b_ub, n))
    est = pd.mean(axis=1)
    if cfg.cpmi_form == "halfwidth":
        lo = est - m_lb - tv_lb * np.sqrt(t_lb)
        hi = est + m_ub + tv_ub * np.sqrt(t_ub)
    else:
        lo = m_lb - tv_lb * np.sqrt(t_lb)
        hi = m_ub + tv_ub * np.sqrt(t_ub)
    return est, lo, hi


def _full_bayes(rng, y, f, m, prior, cfg):
    n = (y + f + m)[:, None]
    s = y[:, None] + sample_beta_binomial_inverse(
        rng, m, prior.alpha_pre + y, prior.beta_pre + f, cfg.M
    )
    draws = sample_beta(rng, prior.alpha_post + s, prior.beta_post + n - s)
    a = cfg.alpha_level
    lo, med, hi = np.quantile(draws, [a / 2, 0.5, 1 - a / 2], axis=1)
    est = med if cfg.bayes_estimate == "median" else draws.mean(axis=1)
    return est, lo, hi


def _beta_mi(rng, y, f, m, prior, cfg):
    n = (y + f + m)[:, None]
    s = y[:, None] + _draw_missing(rng, y, f, m, prior, cfg.D)
    A = prior.alpha_post + s
    Bp = prior.beta_post + n - s
    tot = A + Bp
    V = A * Bp / (tot * tot * (tot + 1))
    if cfg.beta_mi_estimates == "draw":
        # nothing to impute: the D completed datasets coincide, so B must be 0
        pd = np.where(m[:, None] > 0, sample_beta(rng, A, Bp), A / tot)
    else:
        pd = A / tot
    mu, _, _, total = pool_arrays(pd, V, cfg.inflate)
    with np.errstate(divide="ignore", invalid="ignore"):
        k = mu * (1 - mu) / total - 1
    ok = (k > 0) & np.isfinite(k) & (mu > 0) & (mu < 1)
    if not np.all(ok):
        log.warning("beta moment match infeasible for %d replicate(s); using (0, 1)", int((~ok).sum()))
    lo = np.zeros_like(mu)
    hi = np.ones_like(mu)
    if np.any(ok):
        lo[ok], hi[ok] = shortest_beta_intervals(
            mu[ok] * k[ok], (1 - mu[ok]) * k[ok], 1 - cfg.alpha_level, cfg.grid_step
        )
    return mu, lo, hi


# ---------------------------------------------------------------------------
# shortest interval on a grid


def _grid(step: float) -> np.ndarray:
    cells = int(round(1 / step))
    return np.linspace(0.0, 1.0, cells + 1)


def _shortest_on_cdf(F: np.ndarray, coverage: float) -> tuple[np.ndarray, np.ndarray]:
    """Grid indices (l, u) of the shortest span with F[u] - F[l] >= coverage.

    ``F`` has shape (R, G) and is nondecreasing along each row. For each
    left index the smallest admissible right index is located by binary
    search (``searchsorted`` over row-offset CDFs), then nudged so the
    admissibility test is exactly ``F[u] - F[l] >= coverage``. Ties in
    length go to the smallest left index.
    """
    R, G = F.shape
    offs = 2.0 * np.arange(R)[:, None]
    flat = (F + offs).ravel()
    target = (F + coverage + offs).ravel()
    u = np.searchsorted(flat, target, side="left").reshape(R, G) - np.arange(R)[:, None] * G
    u = np.clip(u, 0, G)
    rows = np.arange(R)[:, None]
    lidx = np.broadcast_to(np.arange(G)[None, :], (R, G))

    def admissible(uu):
        inside = uu < G
        val = np.where(inside, F[rows, np.minimum(uu, G - 1)] - F, -np.inf)
        return inside & (val >= coverage)

    for _ in range(G):
        step_up = (u < G) & ~admissible(u)
        if not np.any(step_up):
            break
        u = np.where(step_up, u + 1, u)
    for _ in range(G):
        step_down = (u - 1 >= lidx) & admissible(u - 1)
        if not np.any(step_down):
            break
        u = np.where(step_down, u - 1, u)
    span = np.where(u < G, u - lidx, G + 1)
    best = np.argmin(span, axis=1)
    return best, u[np.arange(R), best]


def shortest_beta_intervals(a, b, coverage: float, step: float):
    """Vectorised :func:`shortest_beta_interval` over arrays ``a``, ``b``."""
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    g = _grid(step)
    F = special.betainc(a[:, None], b[:, None], g[None, :])
    li, ui = _shortest_on_cdf(F, coverage)
    return g[li], g[ui]


def shortest_beta_interval(a: float, b: float, coverage: float = 0.95, step: float = 0.001):
    """Shortest interval on the grid {0, step, ..., 1} with Beta(a, b) mass >= coverage.

    Among equally short intervals the one with the smallest lower bound
    is returned (the conservative choice when high rates are good news).
    """
    if not (a > 0 and b > 0):
        raise ValueError("shape parameters must be positive")
    if not 0 < coverage < 1:
        raise ValueError("coverage must lie in (0, 1)")
    lo, hi = shortest_beta_intervals([a], [b], coverage, step)
    return float(lo[0]), float(hi[0])


def beta_moment_match(mean: float, variance: float) -> tuple[float, float]:
    """Beta(a, b) with the given mean and variance; raises if infeasible."""
    if not (0 < mean < 1) or not (0 < variance < mean * (1 - mean)):
        raise ValueError("no Beta distribution has this mean and variance")
    k = mean * (1 - mean) / variance - 1
    return mean * k, (1 - mean) * k


# ---------------------------------------------------------------------------
# dispatch

Kernel = Callable[..., tuple[np.ndarray, np.ndarray, np.ndarray]]

KERNELS: dict[MethodId, Kernel] = {
    MethodId.COMPLETE_CASE: _complete_case,
    MethodId.IMPUTE_SUCCESS: _impute_success,
    MethodId.IMPUTE_FAILURE: _impute_failure,
    MethodId.WALD_MI: _wald_mi,
    MethodId.WILSON_MI: _wilson_mi,
    MethodId.LOGODDS_MI: _logodds_mi,
    MethodId.BOOTSTRAP: _bootstrap,
    MethodId.JACKKNIFE: _jackknife,
    MethodId.MODIFIED_CPMI: _modified_cpmi,
    MethodId.FULL_BAYES: _full_bayes,
    MethodId.BETA_MI: _beta_mi,
}


def run_batch(method: MethodId, rng, y, f, m, prior: PriorSpec, cfg: RunConfig):
    """Apply ``method`` to R datasets at once; NaN rows are undefined."""
    y, f, m = (np.asarray(v, dtype=np.int64).reshape(-1) for v in (y, f, m))
    return KERNELS[MethodId(method)](rng, y, f, m, prior, cfg)


def estimate(
    method: MethodId | str,
    data: TrialData,
    prior: PriorSpec | None = None,
    cfg: RunConfig | None = None,
    rng: np.random.Generator | None = None,
) -> IntervalEstimate:
    """Run one method on one dataset.

    ``rng`` defaults to a fresh generator seeded from ``cfg.seed``.
    Raises :class:`NoObservedData` when the method is undefined for
    ``data`` (complete case, bootstrap and jackknife with nothing observed).
    """
    method = MethodId.parse(method) if isinstance(method, str) else MethodId(method)
    prior = prior or PriorSpec()
    cfg = cfg or RunConfig()
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    est, lo, hi = run_batch(method, rng, [data.y_obs], [data.f_obs], [data.n_miss], prior, cfg)
    if np.isnan(est[0]):
        raise NoObservedData(f"{method.value} is undefined without observed outcomes")
    return IntervalEstimate(float(est[0]), float(lo[0]), float(hi[0]))


def complete_case(data: TrialData, alpha: float = 0.05) -> IntervalEstimate:
    return estimate(MethodId.COMPLETE_CASE, data, cfg=RunConfig(alpha_level=alpha))


def impute_all_success(data: TrialData, alpha: float = 0.05) -> IntervalEstimate:
    return estimate(MethodId.IMPUTE_SUCCESS, data, cfg=RunConfig(alpha_level=alpha))


def impute_all_failure(data: TrialData, alpha: float = 0.05) -> IntervalEstimate:
    return estimate(MethodId.IMPUTE_FAILURE, data, cfg=RunConfig(alpha_level=alpha))


def wald_mi(rng, data, prior=None, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.WALD_MI, data, prior, cfg, rng)


def wilson_mi(rng, data, prior=None, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.WILSON_MI, data, prior, cfg, rng)


def logodds_mi(rng, data, prior=None, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.LOGODDS_MI, data, prior, cfg, rng)


def bootstrap_ci(rng, data, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.BOOTSTRAP, data, None, cfg, rng)


def jackknife_ci(rng, data, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.JACKKNIFE, data, None, cfg, rng)


def modified_cpmi(rng, data, prior=None, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.MODIFIED_CPMI, data, prior, cfg, rng)


def full_bayes(rng, data, prior=None, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.FULL_BAYES, data, prior, cfg, rng)


def beta_mi(rng, data, prior=None, cfg=None) -> IntervalEstimate:
    return estimate(MethodId.BETA_MI, data, prior, cfg, rng)
