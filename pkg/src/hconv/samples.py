"""Test-function generators used by the verifier suites, scripts and tests."""

from __future__ import annotations

import numpy as np

from .grid import Grid, SampledFunction


def gaussian(grid: Grid, amplitude=2.0, center=0.0, width=1.0) -> SampledFunction:
    """amplitude * exp(-((x - center)/width)^2)."""
    return grid.sample(lambda x: amplitude * np.exp(-((x - center) / width) ** 2))


def gaussian_mixture(grid: Grid, rng: np.random.Generator, n_components: int = 3,
                     center_range=2.0, widths=(0.5, 1.0)) -> SampledFunction:
    """Random sum of Gaussians exp(-(x-c)^2/(2 s^2)) with amplitudes in [-1, 1].

    The defaults keep the mass outside [-10, 10] below 1e-12 and the transform
    negligible beyond |y| = 20.
    """
    amps = rng.uniform(-1.0, 1.0, n_components)
    centers = rng.uniform(-center_range, center_range, n_components)
    sig = rng.uniform(widths[0], widths[1], n_components)
    x = grid.nodes[:, None]
    vals = np.sum(amps * np.exp(-((x - centers) ** 2) / (2 * sig**2)), axis=1)
    return SampledFunction(grid, vals)


def bump(grid: Grid, center=0.0, radius=1.0, amplitude=1.0) -> SampledFunction:
    """Smooth compactly supported exp(-1/(1 - s^2)) with s = (x - center)/radius."""
    s = (grid.nodes - center) / radius
    inside = np.abs(s) < 1
    vals = np.zeros(grid.N)
    vals[inside] = amplitude * np.exp(-1.0 / (1.0 - s[inside] ** 2))
    return SampledFunction(grid, vals)


def box(grid: Grid, half_width=1.0) -> SampledFunction:
    return SampledFunction(grid, (np.abs(grid.nodes) <= half_width).astype(float))
