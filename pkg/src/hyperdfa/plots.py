"""Heatmap rendering for experiment sweeps (density x cyclicity grids)."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .experiment import CellStats  # noqa: E402

_PANELS = (
    ("avg_min_size", "Average minimal DFA size"),
    ("savings_ratio", "Ratio of states saved by hyper-minimization"),
    ("naive_errors", "Errors of baseline hyper-minimal DFAs"),
    ("avoided_ratio", "Ratio of errors avoided by optimal merging"),
)


def render_figures(rows: list[CellStats], outdir: str) -> list[str]:
    """One PNG heatmap per measured quantity; returns the written paths."""
    os.makedirs(outdir, exist_ok=True)
    densities = sorted({r.density for r in rows})
    cyclicities = sorted({r.cyclicity for r in rows})
    d_idx = {v: i for i, v in enumerate(densities)}
    c_idx = {v: i for i, v in enumerate(cyclicities)}

    def span(values):
        lo, hi = min(values), max(values)
        if lo == hi:  # single row or column: give the axis some width
            lo, hi = lo - 0.5, hi + 0.5
        return lo, hi

    d_lo, d_hi = span(densities)
    c_lo, c_hi = span(cyclicities)

    written = []
    for field, title in _PANELS:
        grid = [[float("nan")] * len(densities) for _ in cyclicities]
        for r in rows:
            grid[c_idx[r.cyclicity]][d_idx[r.density]] = getattr(r, field)
        fig, ax = plt.subplots(figsize=(7, 4.5))
        im = ax.imshow(
            grid,
            origin="lower",
            aspect="auto",
            extent=(d_lo, d_hi, c_lo, c_hi),
            cmap="viridis",
        )
        ax.set_xlabel("transition density")
        ax.set_ylabel("cyclicity")
        ax.set_title(title)
        fig.colorbar(im, ax=ax)
        path = os.path.join(outdir, f"{field}.png")
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written
