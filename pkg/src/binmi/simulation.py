"""Monte Carlo coverage study over the missing-rate x n x true-rate grid.

Replicates are processed in fixed-size chunks. Each (scenario, chunk)
pair has its own data stream and each (scenario, chunk, method) its own
estimator stream, all addressed by the scenario's *values* rather than
its position, so results do not depend on scenario order, on how many
worker processes run, or on which other methods are requested.
"""

from __future__ import annotations

import csv
import itertools
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ._io import atomic_write_text, csv_text
from .dist import RngStream
from .methods import MethodId, PriorSpec, RunConfig, TrialData, run_batch

log = logging.getLogger(__name__)

TRUE_RATES = (0.70, 0.80, 0.90, 0.99)
SAMPLE_SIZES = (10, 20, 30, 50)
MISSING_RATES = (0.01, 0.10, 0.20, 0.30)

CHUNK = 250
_DATA_STREAM = 15

RESULT_COLUMNS = (
    "method",
    "true_rate",
    "n",
    "missing_rate",
    "replicates",
    "avg_length",
    "coverage",
    "undefined_count",
)
SUMMARY_COLUMNS = (
    "method",
    "label",
    "length_mean",
    "length_median",
    "length_min",
    "length_max",
    "coverage_pct_mean",
    "coverage_pct_median",
    "coverage_pct_min",
    "coverage_pct_max",
)


@dataclass(frozen=True)
class Scenario:
    true_rate: float
    n: int
    missing_rate: float
    replicates: int = 5000

    def __post_init__(self) -> None:
        if not 0 < self.true_rate < 1:
            raise ValueError(f"true_rate must lie in (0, 1), got {self.true_rate}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.missing_rate < 1:
            raise ValueError(f"missing_rate must lie in [0, 1), got {self.missing_rate}")
        if self.replicates < 1:
            raise ValueError("replicates must be positive")

    @property
    def key(self) -> tuple[float, int, float]:
        return (self.true_rate, self.n, self.missing_rate)


@dataclass(frozen=True)
class ScenarioResult:
    method: MethodId
    scenario: Scenario
    avg_length: float
    coverage: float
    undefined_count: int = 0


@dataclass(frozen=True)
class SummaryRow:
    method: MethodId
    length_mean: float
    length_median: float
    length_min: float
    length_max: float
    coverage_mean: float
    coverage_median: float
    coverage_min: float
    coverage_max: float


def default_grid(replicates: int = 5000) -> list[Scenario]:
    """The 4 x 4 x 4 = 64 scenarios of the study."""
    return [
        Scenario(p, n, mr, replicates)
        for p, n, mr in itertools.product(TRUE_RATES, SAMPLE_SIZES, MISSING_RATES)
    ]


def _stream_id(scenario: Scenario, chunk: int, slot: int) -> int:
    # 14 + 12 + 14 + 16 + 4 bits; values chosen so every grid cell is distinct
    rate = int(round(scenario.true_rate * 10_000))
    miss = int(round(scenario.missing_rate * 10_000))
    if scenario.n >= 1 << 12 or chunk >= 1 << 16:
        raise ValueError("scenario too large to address a random stream")
    return (((((rate << 12) | scenario.n) << 14 | miss) << 16 | chunk) << 4) | slot


def _method_slot(method: MethodId) -> int:
    return list(MethodId).index(method)


MISSINGNESS_MODES = ("bernoulli-min1", "bernoulli", "fixed", "fixed-ceil")


def missing_count(scenario: Scenario, mode: str) -> int:
    """Number of missing subjects under a fixed-count mode.

    ``"fixed"`` rounds ``missing_rate * n`` half up; ``"fixed-ceil"``
    rounds up, so every scenario with a positive rate has at least one
    missing subject. A 1e-9 slack absorbs products such as 0.1 * 30.
    """
    x = scenario.missing_rate * scenario.n
    if mode == "fixed":
        return int(math.floor(x + 0.5 + 1e-9))
    if mode == "fixed-ceil":
        return int(math.ceil(x - 1e-9))
    raise ValueError(f"not a fixed-count mode: {mode!r}")


def generate_batch(rng: np.random.Generator, scenario: Scenario, size: int, missingness: str = "bernoulli-min1"):
    """Simulate ``size`` datasets; returns integer arrays (y_obs, f_obs, n_miss).

    Outcomes are Bernoulli(true_rate) per subject. Under ``"bernoulli"``
    missingness each subject is independently missing with probability
    ``missing_rate`` (MCAR). ``"bernoulli-min1"`` is the same mechanism
    conditioned on at least one missing subject: rows with none are
    redrawn (a no-op when ``missing_rate`` is 0). The fixed-count modes
    mark exactly :func:`missing_count` randomly chosen subjects missing.
    """
    n = scenario.n
    success = rng.random((size, n)) < scenario.true_rate
    if missingness in ("bernoulli", "bernoulli-min1"):
        missing = rng.random((size, n)) < scenario.missing_rate
        if missingness == "bernoulli-min1" and scenario.missing_rate > 0:
            empty = ~missing.any(axis=1)
            while empty.any():
                missing[empty] = rng.random((int(empty.sum()), n)) < scenario.missing_rate
                empty = ~missing.any(axis=1)
    elif missingness in MISSINGNESS_MODES:
        k = missing_count(scenario, missingness)
        ranks = np.argsort(rng.random((size, n)), axis=1)
        missing = ranks < k
    else:
        raise ValueError(f"unknown missingness mode {missingness!r}")
    observed = ~missing
    y = (success & observed).sum(axis=1)
    f = (~success & observed).sum(axis=1)
    m = missing.sum(axis=1)
    return y, f, m


def generate_replicate(rng: np.random.Generator, scenario: Scenario, missingness: str = "bernoulli-min1") -> TrialData:
    y, f, m = generate_batch(rng, scenario, 1, missingness)
    return TrialData(int(y[0]), int(f[0]), int(m[0]))


def run_scenario(
    scenario: Scenario,
    methods: Sequence[MethodId],
    prior: PriorSpec | None = None,
    cfg: RunConfig | None = None,
    missingness: str = "bernoulli-min1",
) -> list[ScenarioResult]:
    """Coverage and mean interval length of each method in one scenario.

    Coverage counts intervals with lower <= true_rate <= upper; both
    statistics use only the replicates where the method was defined.
    """
    prior = prior or PriorSpec()
    cfg = cfg or RunConfig()
    methods = [MethodId(m) for m in methods]
    covered = {m: 0 for m in methods}
    length_sum = {m: 0.0 for m in methods}
    undefined = {m: 0 for m in methods}
    n_chunks = math.ceil(scenario.replicates / CHUNK)
    for c in range(n_chunks):
        size = min(CHUNK, scenario.replicates - c * CHUNK)
        data_rng = RngStream(cfg.seed, _stream_id(scenario, c, _DATA_STREAM)).generator()
        y, f, m = generate_batch(data_rng, scenario, size, missingness)
        for method in methods:
            rng = RngStream(cfg.seed, _stream_id(scenario, c, _method_slot(method))).generator()
            _, lo, hi = run_batch(method, rng, y, f, m, prior, cfg)
            ok = ~np.isnan(lo)
            undefined[method] += int((~ok).sum())
            covered[method] += int(((lo[ok] <= scenario.true_rate) & (scenario.true_rate <= hi[ok])).sum())
            length_sum[method] += float((hi[ok] - lo[ok]).sum())
    out = []
    for method in methods:
        n_def = scenario.replicates - undefined[method]
        out.append(
            ScenarioResult(
                method=method,
                scenario=scenario,
                avg_length=length_sum[method] / n_def if n_def else math.nan,
                coverage=covered[method] / n_def if n_def else math.nan,
                undefined_count=undefined[method],
            )
        )
    return out


def _run_one(args):
    return run_scenario(*args)


def run_grid(
    scenarios: Iterable[Scenario],
    methods: Sequence[MethodId],
    prior: PriorSpec | None = None,
    cfg: RunConfig | None = None,
    threads: int = 1,
    missingness: str = "bernoulli-min1",
    progress=None,
) -> list[ScenarioResult]:
    """Run every scenario; output order follows ``scenarios`` then ``methods``.

    ``threads > 1`` fans scenarios out over worker processes. Output is
    identical for any worker count.
    """
    prior = prior or PriorSpec()
    cfg = cfg or RunConfig()
    scenarios = list(scenarios)
    jobs = [(s, list(methods), prior, cfg, missingness) for s in scenarios]
    results: list[ScenarioResult] = []
    if threads <= 1:
        for i, job in enumerate(jobs):
            results.extend(_run_one(job))
            if progress:
                progress(i + 1, len(jobs))
        return results
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for i, res in enumerate(pool.map(_run_one, jobs)):
            results.extend(res)
            if progress:
                progress(i + 1, len(jobs))
    return results


def summarize(results: Iterable[ScenarioResult]) -> list[SummaryRow]:
    """Mean, median, min and max of each method's per-scenario statistics."""
    by_method: dict[MethodId, list[ScenarioResult]] = {}
    for r in results:
        by_method.setdefault(MethodId(r.method), []).append(r)
    rows = []
    for method in MethodId:
        rs = by_method.get(method)
        if not rs:
            continue
        lengths = np.array([r.avg_length for r in rs], dtype=float)
        cover = np.array([r.coverage for r in rs], dtype=float)
        lengths = lengths[~np.isnan(lengths)]
        cover = cover[~np.isnan(cover)]
        rows.append(
            SummaryRow(
                method,
                float(lengths.mean()),
                float(np.median(lengths)),
                float(lengths.min()),
                float(lengths.max()),
                float(cover.mean()),
                float(np.median(cover)),
                float(cover.min()),
                float(cover.max()),
            )
        )
    return rows


FIGURE_SLICES = {
    "fig1": {"n": 50, "missing_rate": 0.10},
    "fig2": {"missing_rate": 0.10, "true_rate": 0.99},
    "fig3": {"n": 50, "true_rate": 0.99},
}

_DIMS = ("true_rate", "n", "missing_rate")


def slice_report(results: Iterable[ScenarioResult], fixed: dict) -> list[dict]:
    """Rows of one figure panel: two dimensions pinned, the third varying.

    Returns dicts with ``method``, the free dimension's name and value,
    ``avg_length`` and ``coverage``, sorted by method then free value.
    """
    if len(fixed) != 2 or not set(fixed) <= set(_DIMS):
        raise ValueError(f"fix exactly two of {_DIMS}")
    (free,) = set(_DIMS) - set(fixed)
    rows = []
    for r in results:
        s = r.scenario
        if all(math.isclose(getattr(s, k), v) for k, v in fixed.items()):
            rows.append(
                {
                    "method": MethodId(r.method),
                    free: getattr(s, free),
                    "avg_length": r.avg_length,
                    "coverage": r.coverage,
                }
            )
    order = {m: i for i, m in enumerate(MethodId)}
    rows.sort(key=lambda d: (order[d["method"]], d[free]))
    return rows


# ---------------------------------------------------------------------------
# persistence


def results_csv_text(results: Iterable[ScenarioResult]) -> str:
    return csv_text(
        RESULT_COLUMNS,
        (
            (
                MethodId(r.method).value,
                r.scenario.true_rate,
                r.scenario.n,
                r.scenario.missing_rate,
                r.scenario.replicates,
                r.avg_length,
                r.coverage,
                r.undefined_count,
            )
            for r in results
        ),
    )


def write_results_csv(path: str | os.PathLike, results: Iterable[ScenarioResult]) -> Path:
    return atomic_write_text(path, results_csv_text(results))


def read_results_csv(path: str | os.PathLike) -> list[ScenarioResult]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        missing = set(RESULT_COLUMNS) - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"{path}: missing columns {sorted(missing)}")
        out = []
        for row in reader:
            scen = Scenario(
                float(row["true_rate"]),
                int(row["n"]),
                float(row["missing_rate"]),
                int(row["replicates"]),
            )
            out.append(
                ScenarioResult(
                    MethodId.parse(row["method"]),
                    scen,
                    float(row["avg_length"]),
                    float(row["coverage"]),
                    int(row["undefined_count"]),
                )
            )
    return out


def summary_csv_text(rows: Iterable[SummaryRow]) -> str:
    return csv_text(
        SUMMARY_COLUMNS,
        (
            (
                r.method.value,
                r.method.label,
                round(r.length_mean, 4),
                round(r.length_median, 4),
                round(r.length_min, 4),
                round(r.length_max, 4),
                round(100 * r.coverage_mean, 2),
                round(100 * r.coverage_median, 2),
                round(100 * r.coverage_min, 2),
                round(100 * r.coverage_max, 2),
            )
            for r in rows
        ),
    )


def write_summary_csv(path: str | os.PathLike, rows: Iterable[SummaryRow]) -> Path:
    return atomic_write_text(path, summary_csv_text(rows))


def read_scenarios_csv(path: str | os.PathLike, replicates: int | None = None) -> list[Scenario]:
    """Scenario list from a CSV with columns true_rate, n, missing_rate[, replicates]."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        out = []
        for row in reader:
            reps = replicates or int(row.get("replicates") or 5000)
            out.append(Scenario(float(row["true_rate"]), int(row["n"]), float(row["missing_rate"]), reps))
    if not out:
        raise ValueError(f"{path}: no scenarios")
    return out
