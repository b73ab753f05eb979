"""Parameter-sweep harness: how much does hyper-minimization save, and how
many of its errors does optimal merging avoid, across a grid of transition
densities and cyclicities.

Each cell generates a fixed number of random NFAs, determinizes and
minimizes them, runs both the baseline and the optimal merging strategy, and
measures both true error counts on the product automaton.  Results are
aggregated per cell in a fixed order, so a given base seed always produces a
byte-identical CSV.
"""

from __future__ import annotations

import io
import random
from dataclasses import dataclass

from .automata import INFINITE, determinize, diff_count, kernel_preamble, minimize
from .almost_equiv import compute_almost_equivalence
from .error_model import ErrorMatrix, comp_access
from .hypermin import merge_states_naive, opt_merge
from .randgen import RandomModelParams, generate_nfa

CSV_HEADER = "density,cyclicity,avg_min_size,savings_ratio,naive_errors,avoided_ratio"

_DF_SEED_SALT = 0x9E3779B97F4A7C15  # decorrelates the d_F draw from the NFA draws


def default_densities() -> tuple[float, ...]:
    return tuple(round(0.2 * i, 10) for i in range(1, 16))  # 0.2 .. 3.0


def default_cyclicities() -> tuple[float, ...]:
    return tuple(round(0.1 * i, 10) for i in range(11))  # 0.0 .. 1.0


@dataclass(frozen=True)
class ExperimentGrid:
    densities: tuple[float, ...]
    cyclicities: tuple[float, ...]
    instances: int = 100
    state_count: int = 30
    alphabet_size: int = 2
    d_f_range: tuple[float, float] = (0.3, 0.7)
    base_seed: int = 1


@dataclass(frozen=True)
class CellStats:
    density: float
    cyclicity: float
    avg_min_size: float
    savings_ratio: float
    naive_errors: float
    avoided_ratio: float


def run_instance(grid: ExperimentGrid, density: float, cyclicity: float,
                 instance_seed: int) -> tuple[int, int, int, int]:
    """(minimal size, hyper-minimal size, naive error count, optimal error
    count) for one random instance."""
    lo, hi = grid.d_f_range
    d_f = lo + (hi - lo) * random.Random(instance_seed ^ _DF_SEED_SALT).random()
    params = RandomModelParams(
        state_count=grid.state_count,
        alphabet_size=grid.alphabet_size,
        d_delta=density / grid.state_count,
        d_f=d_f,
        cyclicity=cyclicity,
        seed=instance_seed,
    )
    d = minimize(determinize(generate_nfa(params)))
    k = kernel_preamble(d)
    part = compute_almost_equivalence(d, k)
    w = comp_access(d, k)
    e = ErrorMatrix(d, part)

    naive = merge_states_naive(d, part, k)
    naive_errors = diff_count(d, naive)
    assert naive_errors != INFINITE, "baseline merging must stay almost-equivalent"
    report = opt_merge(d, part, k, e, w)
    assert report.states_after == naive.state_count
    return d.state_count, naive.state_count, int(naive_errors), report.errors


def run_experiment(grid: ExperimentGrid) -> list[CellStats]:
    rows = []
    index = 0
    for density in grid.densities:
        for cyclicity in grid.cyclicities:
            min_sizes = hyper_sizes = 0
            naive_total = opt_total = 0
            for _ in range(grid.instances):
                n_min, n_hyper, e_naive, e_opt = run_instance(
                    grid, density, cyclicity, grid.base_seed + index
                )
                index += 1
                min_sizes += n_min
                hyper_sizes += n_hyper
                naive_total += e_naive
                opt_total += e_opt
            # cell-level ratios of totals: per-instance ratios are dominated
            # by the many instances with zero or near-zero error counts
            rows.append(CellStats(
                density=density,
                cyclicity=cyclicity,
                avg_min_size=min_sizes / grid.instances,
                savings_ratio=(min_sizes - hyper_sizes) / min_sizes,
                naive_errors=naive_total / grid.instances,
                avoided_ratio=((naive_total - opt_total) / naive_total
                               if naive_total else 0.0),
            ))
    return rows


def to_csv(rows: list[CellStats]) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in rows:
        buf.write(
            f"{r.density:g},{r.cyclicity:g},{r.avg_min_size:.6f},"
            f"{r.savings_ratio:.6f},{r.naive_errors:.6f},{r.avoided_ratio:.6f}\n"
        )
    return buf.getvalue()
