"""Special functions, quantiles and seeded samplers used by every estimator.

The CDF/quantile functions are thin, validated wrappers around
``scipy.special``; samplers draw from :class:`numpy.random.Generator`
objects built from an :class:`RngStream` (a counter-based Philox stream
keyed by ``(seed, stream_id)``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special

__all__ = [
    "RngStream",
    "regularized_incomplete_beta",
    "beta_quantile",
    "student_t_quantile",
    "normal_quantile",
    "sample_binomial",
    "sample_beta",
    "sample_beta_binomial",
    "sample_beta_binomial_inverse",
]

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngStream:
    """Address of an independent random substream.

    Two streams with the same ``(seed, stream_id)`` produce bitwise
    identical sequences; distinct ``stream_id`` values are statistically
    independent (they are spawned children of one ``SeedSequence``).
    A ``RngStream`` is only a key: call :meth:`generator` to obtain a
    fresh generator positioned at the start of the stream.
    """

    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        for name in ("seed", "stream_id"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or v < 0 or v > _MASK64:
                raise ValueError(f"{name} must be a 64-bit unsigned integer, got {v!r}")

    def generator(self) -> np.random.Generator:
        seq = np.random.SeedSequence(int(self.seed), spawn_key=(int(self.stream_id),))
        return np.random.Generator(np.random.Philox(seq))


def _check_shape_params(a, b) -> None:
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("shape parameters must be finite")
    if np.any(np.asarray(a) <= 0) or np.any(np.asarray(b) <= 0):
        raise ValueError("shape parameters must be positive")


def regularized_incomplete_beta(x, a, b):
    """I_x(a, b), the Beta(a, b) CDF evaluated at ``x``. Broadcasts."""
    x = np.asarray(x, dtype=float)
    _check_shape_params(a, b)
    if np.any((x < 0) | (x > 1)) or np.any(np.isnan(x)):
        raise ValueError("x must lie in [0, 1]")
    out = special.betainc(a, b, x)
    return out if np.ndim(out) else float(out)


def beta_quantile(p, a, b):
    """Inverse of :func:`regularized_incomplete_beta` in ``x``.

    ``scipy.special.betaincinv`` supplies the starting point; one guarded
    Newton step on the CDF then tightens the residual where the density
    is well conditioned. ``p = 0`` maps to 0 and ``p = 1`` to 1 exactly.
    """
    p = np.asarray(p, dtype=float)
    _check_shape_params(a, b)
    if np.any((p < 0) | (p > 1)) or np.any(np.isnan(p)):
        raise ValueError("p must lie in [0, 1]")
    a_, b_ = np.broadcast_arrays(np.asarray(a, float), np.asarray(b, float))
    q = special.betaincinv(a, b, p)
    q = np.asarray(q, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        interior = (q > 0) & (q < 1)
        a_b, b_b, p_b = np.broadcast_arrays(a_, b_, p)
        logpdf = (
            (a_b - 1) * np.log(q) + (b_b - 1) * np.log1p(-q) - special.betaln(a_b, b_b)
        )
        pdf = np.exp(logpdf)
        resid = special.betainc(a_b, b_b, q) - p_b
        step = resid / pdf
        cand = q - step
        ok = interior & np.isfinite(cand) & (cand > 0) & (cand < 1) & (np.abs(step) < 1e-6)
        if np.any(ok):
            better = np.abs(special.betainc(a_b, b_b, cand) - p_b) < np.abs(resid)
            q = np.where(ok & better, cand, q)
    q = np.where(p == 0, 0.0, np.where(p == 1, 1.0, q))
    return q if q.ndim else float(q)


def student_t_quantile(p, df):
    """Quantile of Student's t; ``df = inf`` gives the normal quantile."""
    p = np.asarray(p, dtype=float)
    df = np.asarray(df, dtype=float)
    if np.any((p <= 0) | (p >= 1)) or np.any(np.isnan(p)):
        raise ValueError("p must lie in (0, 1)")
    if np.any(df <= 0) or np.any(np.isnan(df)):
        raise ValueError("df must be positive")
    out = np.where(np.isinf(df), special.ndtri(p), special.stdtrit(np.where(np.isinf(df), 1.0, df), p))
    return out if out.ndim else float(out)


def normal_quantile(p):
    p = np.asarray(p, dtype=float)
    if np.any((p <= 0) | (p >= 1)) or np.any(np.isnan(p)):
        raise ValueError("p must lie in (0, 1)")
    out = special.ndtri(p)
    return out if out.ndim else float(out)


def sample_binomial(rng: np.random.Generator, n, p, size=None):
    """Binomial(n, p) draws; ``p`` outside [0, 1] by round-off is clipped."""
    p = np.clip(p, 0.0, 1.0)
    out = rng.binomial(n, p, size=size)
    return out if np.ndim(out) else int(out)


_TINY = np.finfo(float).tiny
_ONE_MINUS = np.nextafter(1.0, 0.0)


def sample_beta(rng: np.random.Generator, a, b, size=None):
    """Beta(a, b) draws, kept strictly inside (0, 1).

    With very lopsided shapes (e.g. Beta(49, 0.5)) a float64 draw can
    round to an endpoint; those are nudged to the nearest interior float.
    """
    out = np.clip(rng.beta(a, b, size=size), _TINY, _ONE_MINUS)
    return out if np.ndim(out) else float(out)


def sample_beta_binomial(rng: np.random.Generator, n, a, b, size=None):
    """Beta-Binomial(n, a, b) by composition: p ~ Beta(a, b), then Binomial(n, p)."""
    p = sample_beta(rng, a, b, size=size)
    return sample_binomial(rng, n, p)


def beta_binomial_pmf(k, n, a, b):
    k = np.asarray(k, dtype=float)
    logp = (
        special.gammaln(n + 1)
        - special.gammaln(k + 1)
        - special.gammaln(n - k + 1)
        + special.betaln(k + a, n - k + b)
        - special.betaln(a, b)
    )
    out = np.exp(logp)
    return out if np.ndim(out) else float(out)


def sample_beta_binomial_inverse(rng: np.random.Generator, n, a, b, size):
    """Beta-Binomial draws by inverting the exact pmf, one uniform per draw.

    ``n``, ``a``, ``b`` are per-row parameters of shape ``(R,)``; returns
    an integer array of shape ``(R, size)``. Same law as
    :func:`sample_beta_binomial`; cheaper when many draws share
    parameters, which is the posterior-predictive case.
    """
    n = np.asarray(n).reshape(-1)
    a = np.broadcast_to(np.asarray(a, dtype=float).reshape(-1), n.shape)
    b = np.broadcast_to(np.asarray(b, dtype=float).reshape(-1), n.shape)
    R = n.shape[0]
    K = int(n.max(initial=0)) + 1
    k = np.arange(K)[None, :]
    with np.errstate(invalid="ignore"):
        pmf = np.where(k <= n[:, None], beta_binomial_pmf(k, n[:, None], a[:, None], b[:, None]), 0.0)
    cdf = np.cumsum(pmf, axis=1)
    cdf /= cdf[:, -1:]
    cdf[:, -1] = 1.5  # u < 1 always lands at or before the last cell
    u = rng.random((R, size))
    # row offsets make one global searchsorted do all rows at once
    offs = 2.0 * np.arange(R)[:, None]
    idx = np.searchsorted((cdf + offs).ravel(), (u + offs).ravel(), side="right")
    return idx.reshape(R, size) - (np.arange(R) * K)[:, None]
