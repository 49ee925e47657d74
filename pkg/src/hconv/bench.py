"""Timing of the direct O(N^2) kernel quadrature against the spectral path."""

from __future__ import annotations

import csv
import gc
import io
import statistics
import time

import numpy as np

from .convolution import convolve_direct, convolve_spectral
from .grid import Grid
from .io import RunConfig
from .samples import gaussian_mixture

COLUMNS = ("N", "direct_time", "spectral_time", "max_discrepancy")


def _median_time(fn, repeats: int) -> float:
    """Median wall time after one untimed warm-up call; GC off while timing, as timeit does."""
    fn()
    times = []
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    return statistics.median(times)


def bench(config: RunConfig, sizes, repeats: int = 5) -> list[dict]:
    sizes = list(sizes)
    if any(n % 2 == 0 for n in sizes):
        raise ValueError("benchmark sizes must be odd")
    if sizes != sorted(sizes):
        raise ValueError("benchmark sizes must be ascending")
    params = config.params
    rows = []
    for n in sizes:
        grid = Grid(config.L, n)
        rng = np.random.default_rng([config.seed, n])
        f, g = gaussian_mixture(grid, rng), gaussian_mixture(grid, rng)
        direct = convolve_direct(f, g, params)
        spectral = convolve_spectral(f, g, params)
        rows.append({
            "N": n,
            "direct_time": _median_time(lambda: convolve_direct(f, g, params), repeats),
            "spectral_time": _median_time(lambda: convolve_spectral(f, g, params), repeats),
            "max_discrepancy": float(np.max(np.abs(direct.values - spectral.values))),
        })
    return rows


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (f"{r[k]:.6g}" if isinstance(r[k], float) else r[k]) for k in COLUMNS})
    return buf.getvalue()
