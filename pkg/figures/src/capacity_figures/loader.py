"""Shared CSV loading and plot helpers for the figure scripts.

Every numeric value drawn by a figure comes from a CSV cell written by the
`broadband-capacity` CLI; this module never recomputes physics, it only
reads, validates, selects and sorts.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


class FigureDataError(Exception):
    pass


@dataclass(frozen=True)
class FigureSpec:
    """One render job: figure id, data directory, output image path and the
    styling switches for the bound regions."""

    figure: str
    data_dir: Path
    out_path: Path
    shade_classical: bool = True
    shade_quantum: bool = True
    dpi: int = 150


def read_csv(path, required_columns):
    """Rows of a CLI-written CSV as dicts with float cells where possible.

    Raises FigureDataError when the file is missing, empty, or lacks one of
    the required columns.
    """
    path = Path(path)
    if not path.exists():
        raise FigureDataError(f"missing data file {path}")
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in required_columns if c not in header]
        if missing:
            raise FigureDataError(f"{path}: missing columns {missing}")
        rows = []
        for raw in reader:
            row = {}
            for key, value in raw.items():
                if key is None:
                    continue
                try:
                    row[key] = float(value)
                except (TypeError, ValueError):
                    row[key] = value
            rows.append(row)
    if not rows:
        raise FigureDataError(f"{path}: no data rows")
    return rows


def sweep_curves(rows, key="quantity", x="eta", y="factor"):
    """{label: (xs, ys)} curves from sweep rows, sorted by the x column;
    rows with a nonempty error cell are rejected."""
    curves = {}
    for row in rows:
        if row.get("error"):
            raise FigureDataError(f"row carries an error cell: {row['error']}")
        curves.setdefault(row[key], []).append((row[x], row[y]))
    out = {}
    for label, pts in curves.items():
        pts.sort()
        out[label] = ([p[0] for p in pts], [p[1] for p in pts])
    return out


def bound_regions(ax, etas, ce, c_lower, q_lower, q_alt, spec: FigureSpec):
    """Draw the capacity curves with the allowed regions shaded: the
    classical capacity lives between the coherent-state bound and
    min(assisted, noiseless); the quantum capacity between the best lower
    bound and half the assisted factor."""
    c_upper = [min(v, 1.0) for v in ce]
    q_best = [max(a, b) for a, b in zip(q_lower, q_alt)]
    qe = [v / 2.0 for v in ce]
    if spec.shade_classical:
        ax.fill_between(etas, c_lower, c_upper, color="tab:blue", alpha=0.18,
                        hatch="///", linewidth=0, label="classical capacity region")
    if spec.shade_quantum:
        ax.fill_between(etas, q_best, qe, color="tab:red", alpha=0.18,
                        hatch="xxx", linewidth=0, label="quantum capacity region")
    ax.plot(etas, ce, "k-", lw=2, label="assisted factor", zorder=5)
    ax.plot(etas, c_lower, "b-", lw=1.5, label="coherent-state bound")
    ax.plot(etas, qe, "r--", lw=1.2, label="assisted/2")
    ax.plot(etas, q_lower, "r-", lw=1.5, label="coherent-information bound")
    ax.plot(etas, q_alt, "r:", lw=1.2, label="assisted - noiseless bound")
    ax.axhline(1.0, color="gray", lw=0.8, ls="--")
    ax.set_xlabel("quantum efficiency")
    ax.set_ylabel("capacity factor")
    ax.set_xlim(min(etas), max(etas))
    ax.legend(fontsize=7, loc="upper left")


def save(fig, spec: FigureSpec):
    spec.out_path.parent.mkdir(parents=True, exist_ok=True)
    suffix = spec.out_path.suffix.lower()
    metadata = {"Date": None} if suffix == ".svg" else {}
    fig.savefig(spec.out_path, dpi=spec.dpi, bbox_inches="tight", metadata=metadata)
    plt.close(fig)
    return spec.out_path


def new_figure(width=5.2, height=3.8):
    return plt.figure(figsize=(width, height))
