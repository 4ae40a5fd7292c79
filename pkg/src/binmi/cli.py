"""Command-line entry point: analyze, simulate, summarize, reproduce.

Exit codes: 0 success, 2 usage error, 3 numeric or domain error.
The fully resolved configuration is printed to stderr on every run
(and embedded in JSON output) so any result can be regenerated.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
import time

from . import application, simulation
from ._io import atomic_write_text, csv_text
from .dist import RngStream
from .methods import MethodId, NoObservedData, PriorSpec, RunConfig, TrialData, estimate

log = logging.getLogger("binmi")

EXIT_USAGE = 2
EXIT_DOMAIN = 3

_VARIANT_FIELDS = tuple(
    f.name for f in dataclasses.fields(RunConfig) if f.type in ("str", "bool")
)


class UsageError(Exception):
    pass


def _methods(text: str) -> list[MethodId]:
    if text.strip().lower() == "all":
        return list(MethodId)
    try:
        return [MethodId.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _variant(text: str) -> tuple[str, str]:
    key, sep, value = text.partition("=")
    key = key.strip().replace("-", "_")
    if not sep or key not in _VARIANT_FIELDS:
        raise argparse.ArgumentTypeError(
            f"expected KEY=VALUE with KEY in {', '.join(_VARIANT_FIELDS)}"
        )
    return key, value.strip()


def _add_config_args(p: argparse.ArgumentParser) -> None:
    d = RunConfig()
    p.add_argument("--alpha", type=float, default=d.alpha_level, help="1 - confidence level")
    p.add_argument("--prior", default="0.5,0.5,0.5,0.5", help="a,b,a',b' Beta hyperparameters")
    p.add_argument("--D", type=int, default=d.D, help="imputations")
    p.add_argument("--DD", type=int, default=d.DD, help="parametric bootstrap samples per imputation")
    p.add_argument("--M", type=int, default=d.M, help="full-Bayes posterior draws")
    p.add_argument("--boot", type=int, default=d.B_boot, help="bootstrap resamples")
    p.add_argument("--grid-step", type=float, default=d.grid_step)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument(
        "--option",
        type=_variant,
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="estimator variant switch, e.g. cpmi_form=bounds (repeatable)",
    )


def _resolve(args) -> tuple[PriorSpec, RunConfig]:
    prior = PriorSpec.parse(args.prior)
    extra = {}
    for key, value in args.option:
        if key in ("inflate_between", "eq6_literal"):
            if value.lower() not in ("true", "false", "1", "0"):
                raise ValueError(f"{key} expects true or false, got {value!r}")
            extra[key] = value.lower() in ("true", "1")
        else:
            extra[key] = value
    cfg = RunConfig(
        D=args.D,
        DD=args.DD,
        M=args.M,
        B_boot=args.boot,
        grid_step=args.grid_step,
        alpha_level=args.alpha,
        seed=args.seed,
        **extra,
    )
    return prior, cfg


def _echo_config(command: str, prior: PriorSpec | None, cfg: RunConfig | None, **extra) -> dict:
    info = {"command": command}
    if prior is not None:
        info["prior"] = dataclasses.asdict(prior)
    if cfg is not None:
        info["config"] = cfg.as_dict()
    info.update(extra)
    print("# resolved: " + json.dumps(info, sort_keys=True), file=sys.stderr)
    return info


def _emit(text: str, out: str | None) -> None:
    if out:
        atomic_write_text(out, text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    prior, cfg = _resolve(args)
    methods = _methods(args.method)
    data = TrialData(args.successes, args.failures, args.missing)
    info = _echo_config("analyze", prior, cfg, data=dataclasses.asdict(data))
    rows = []
    for method in methods:
        rng = RngStream(cfg.seed, list(MethodId).index(method)).generator()
        try:
            iv = estimate(method, data, prior, cfg, rng)
        except NoObservedData as exc:
            log.warning("%s", exc)
            rows.append((method.value, None, None, None))
            continue
        rows.append((method.value, iv.estimate, iv.lower, iv.upper))
    if args.format == "json":
        payload = dict(info, results=[dict(zip(application.FOREST_COLUMNS, r)) for r in rows])
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(csv_text(application.FOREST_COLUMNS, [["" if v is None else v for v in r] for r in rows]), args.out)
    return 0


def cmd_simulate(args) -> int:
    prior, cfg = _resolve(args)
    methods = _methods(args.methods)
    if args.scenarios:
        scenarios = simulation.read_scenarios_csv(args.scenarios, args.reps)
    else:
        scenarios = simulation.default_grid(args.reps or 5000)
    _echo_config(
        "simulate",
        prior,
        cfg,
        scenarios=len(scenarios),
        replicates=sorted({s.replicates for s in scenarios}),
        methods=[m.value for m in methods],
        missingness=args.missingness,
    )
    t0 = time.perf_counter()

    def progress(done, total):
        log.info("scenario %d/%d (%.0fs)", done, total, time.perf_counter() - t0)

    results = simulation.run_grid(
        scenarios, methods, prior, cfg, threads=args.threads, missingness=args.missingness, progress=progress
    )
    _emit(simulation.results_csv_text(results), args.out)
    return 0


def cmd_summarize(args) -> int:
    _echo_config("summarize", None, None, results=args.results)
    rows = simulation.summarize(simulation.read_results_csv(args.results))
    _emit(simulation.summary_csv_text(rows), args.out)
    return 0


def cmd_reproduce(args) -> int:
    prior, cfg = _resolve(args)
    dataset = application.DATASETS[args.endpoint]()
    _echo_config("reproduce", prior, cfg, dataset=dataset.name)
    rows = application.forest_table(dataset, prior=prior, cfg=cfg)
    prefix = args.out or dataset.name
    csv_path, svg_path = application.write_forest(prefix, rows, title=dataset.source_note)
    sys.stdout.write(application.forest_csv_text(rows))
    log.info("wrote %s and %s", csv_path, svg_path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binmi",
        description="Confidence intervals for a binomial success rate with missing outcomes.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="interval estimates for one dataset")
    p.add_argument("--successes", type=int, required=True)
    p.add_argument("--failures", type=int, required=True)
    p.add_argument("--missing", type=int, required=True)
    p.add_argument("--method", default="all", help="method id, comma list, or 'all'")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write here instead of stdout")
    _add_config_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simulate", help="Monte Carlo coverage study")
    grid = p.add_mutually_exclusive_group()
    grid.add_argument("--grid", choices=("default",), default="default")
    grid.add_argument("--scenarios", help="CSV with true_rate,n,missing_rate[,replicates]")
    p.add_argument("--reps", type=int, help="replicates per scenario (default 5000)")
    p.add_argument("--methods", default="all")
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument(
        "--missingness", choices=simulation.MISSINGNESS_MODES, default="bernoulli-min1"
    )
    p.add_argument("--out", help="results CSV (stdout if omitted)")
    _add_config_args(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("summarize", help="per-method summary of a results CSV")
    p.add_argument("results")
    p.add_argument("--out")
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("reproduce", help="forest table and plot for a canned dataset")
    p.add_argument("study", choices=("cit07",))
    p.add_argument("--endpoint", choices=tuple(application.DATASETS), default="year1")
    p.add_argument("--out", help="output prefix; writes PREFIX.csv and PREFIX.svg")
    _add_config_args(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "reps", None) is not None and args.reps < 1:
        parser.error("--reps must be positive")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"binmi: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
