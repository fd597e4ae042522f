"""Report figures.

Each function renders one PNG and returns the path it wrote.  The Agg
backend is forced before pyplot is imported so the report subcommand works
headless; nothing here ever opens a window.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .numerics import SCALED_INTEGRAL_LIMIT, AsymptoticSample

__all__ = [
    "scaling_figure",
    "degree_decay_figure",
    "dimension_growth_figure",
]


def scaling_figure(samples: Sequence[AsymptoticSample], path: Path) -> Path:
    """Relative error of sqrt(d) * I_d against its limit, log-log in d."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ds = [s.d for s in samples]
    errs = [s.rel_error for s in samples]
    ax.loglog(ds, errs, "o-", label="scaled integral")
    ax.loglog(ds, [3 / (20 * d) for d in ds], "--", color="gray", label="3/(20d)")
    ax.set_xlabel("d")
    ax.set_ylabel("relative error")
    ax.set_title(f"sqrt(d) I_d vs limit {SCALED_INTEGRAL_LIMIT:.6f}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def degree_decay_figure(degrees: Sequence[tuple[int, float]], path: Path) -> Path:
    """deg as a function of d on a log scale, with the d^(-3/2) guide."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ds = [d for d, _ in degrees]
    vals = [v for _, v in degrees]
    ax.semilogy(ds, vals, "o-", label="deg")
    guide = math.sqrt(6 / math.pi)
    ax.semilogy(ds, [guide * d**-1.5 for d in ds], "--", color="gray",
                label="sqrt(6/pi) d^(-3/2)")
    ax.set_xlabel("d")
    ax.set_ylabel("deg")
    ax.set_title("degree of the covariant algebra")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def dimension_growth_figure(rows: Sequence[tuple[int, Sequence[int]]], path: Path) -> Path:
    """Dimension of the order-i slice for several d, one line per d."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for d, dims in rows:
        ax.plot(range(len(dims)), dims, label=f"d = {d}")
    ax.set_xlabel("i")
    ax.set_ylabel("dimension")
    ax.set_title("slice dimensions of the covariant algebra")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
