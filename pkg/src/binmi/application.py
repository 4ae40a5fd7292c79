"""CIT-07 islet transplant case study: canned counts, forest table and plot."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from ._io import atomic_write_text, csv_text
from .dist import RngStream
from .methods import FOREST_METHODS, MethodId, PriorSpec, RunConfig, TrialData, estimate

FOREST_COLUMNS = ("method", "estimate", "lower", "upper")


@dataclass(frozen=True)
class NamedDataset:
    name: str
    data: TrialData
    source_note: str


@dataclass(frozen=True)
class ForestRow:
    method: MethodId
    estimate: float
    lower: float
    upper: float


def cit07_year1() -> NamedDataset:
    return NamedDataset(
        "cit07-year1",
        TrialData(42, 3, 3),
        "CIT-07 Year 1: 48 transplanted subjects, 42 met the endpoint, 3 did not, 3 missing",
    )


def cit07_year2() -> NamedDataset:
    return NamedDataset(
        "cit07-year2",
        TrialData(34, 8, 6),
        "CIT-07 Year 2: 48 transplanted subjects, 34 met the endpoint, 8 did not, 6 missing",
    )


DATASETS = {"year1": cit07_year1, "year2": cit07_year2}


def forest_table(
    dataset: NamedDataset,
    methods: Sequence[MethodId] = FOREST_METHODS,
    prior: PriorSpec | None = None,
    cfg: RunConfig | None = None,
) -> list[ForestRow]:
    """One row per method, in the order given.

    Each method draws from its own stream keyed by the method, so adding
    or dropping a method does not change the others' numbers.
    """
    prior = prior or PriorSpec()
    cfg = cfg or RunConfig()
    rows = []
    for method in methods:
        method = MethodId(method)
        rng = RngStream(cfg.seed, list(MethodId).index(method)).generator()
        iv = estimate(method, dataset.data, prior, cfg, rng)
        rows.append(ForestRow(method, iv.estimate, iv.lower, iv.upper))
    return rows


def forest_csv_text(rows: Sequence[ForestRow]) -> str:
    return csv_text(FOREST_COLUMNS, ((r.method.value, r.estimate, r.lower, r.upper) for r in rows))


def forest_svg(rows: Sequence[ForestRow], title: str = "") -> str:
    """Self-contained SVG: one whisker per row with a square at the estimate."""
    left, right, top, row_h = 330, 40, 50, 30
    plot_w = 420
    width = left + plot_w + right
    height = top + row_h * len(rows) + 50
    x_max = max(1.0, max((r.upper for r in rows), default=1.0))
    x_min = min(0.0, min((r.lower for r in rows), default=0.0))

    def sx(v: float) -> float:
        return left + (v - x_min) / (x_max - x_min) * plot_w

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" font-size="14">{escape(title)}</text>')
    axis_y = top + row_h * len(rows)
    out.append(f'<line x1="{sx(x_min):.1f}" y1="{axis_y}" x2="{sx(x_max):.1f}" y2="{axis_y}" stroke="black"/>')
    tick = x_min
    while tick <= x_max + 1e-9:
        x = sx(tick)
        out.append(f'<line x1="{x:.1f}" y1="{axis_y}" x2="{x:.1f}" y2="{axis_y + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.1f}" y="{axis_y + 18}" text-anchor="middle">{tick:.1f}</text>')
        tick += 0.2
    # reference line at 1: Wald-type bounds can cross it
    out.append(
        f'<line x1="{sx(1.0):.1f}" y1="{top - 10}" x2="{sx(1.0):.1f}" y2="{axis_y}" '
        'stroke="grey" stroke-dasharray="4,3"/>'
    )
    for i, r in enumerate(rows):
        y = top + row_h * i + row_h / 2
        label = r.method.label.split(") ", 1)[-1]
        out.append(f'<text x="{left - 10}" y="{y + 4:.1f}" text-anchor="end">{escape(label)}</text>')
        out.append(
            f'<line x1="{sx(r.lower):.1f}" y1="{y:.1f}" x2="{sx(r.upper):.1f}" y2="{y:.1f}" '
            'stroke="black" stroke-width="1.5"/>'
        )
        for end in (r.lower, r.upper):
            out.append(f'<line x1="{sx(end):.1f}" y1="{y - 5:.1f}" x2="{sx(end):.1f}" y2="{y + 5:.1f}" stroke="black"/>')
        out.append(f'<rect x="{sx(r.estimate) - 4:.1f}" y="{y - 4:.1f}" width="8" height="8" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_forest(prefix: str | os.PathLike, rows: Sequence[ForestRow], title: str = "") -> tuple[Path, Path]:
    """Write ``<prefix>.csv`` and ``<prefix>.svg``, each atomically."""
    prefix = str(prefix)
    csv_path = atomic_write_text(prefix + ".csv", forest_csv_text(rows))
    svg_path = atomic_write_text(prefix + ".svg", forest_svg(rows, title))
    return csv_path, svg_path
