"""Invertibility of (g, 1) and the functions ell, eta with prescribed transforms."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import SingularSymbol
from .grid import SampledFunction, Spectrum, TransformParams
from .transform import h_forward, h_inverse

log = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 1e-8


@dataclass(frozen=True)
class NonvanishingCertificate:
    min_abs: float
    threshold: float
    node_argmin: float

    @property
    def valid(self) -> bool:
        return self.min_abs > self.threshold

    @property
    def conditioning(self) -> float:
        return np.inf if self.min_abs == 0.0 else 1.0 / self.min_abs


def check_nonvanishing(g: SampledFunction, params: TransformParams,
                       threshold: float = DEFAULT_THRESHOLD) -> NonvanishingCertificate:
    """Minimum of |1 + Hg| over all frequency nodes."""
    return _certificate(h_forward(g, params), threshold)


def _certificate(G: Spectrum, threshold: float) -> NonvanishingCertificate:
    mag = np.abs(1.0 + G.values)
    j = int(np.argmin(mag))
    return NonvanishingCertificate(float(mag[j]), threshold, float(G.grid.nodes[j]))


def _symbol_ratio(g: SampledFunction, params: TransformParams,
                  threshold: float) -> tuple[Spectrum, NonvanishingCertificate]:
    params.require_full_algebra("Wiener-Levy inversion")
    G = h_forward(g, params)
    cert = _certificate(G, threshold)
    if not cert.valid:
        raise SingularSymbol(
            f"|1 + Hg| = {cert.min_abs:.3g} at y = {cert.node_argmin:.6g} "
            f"(threshold {threshold:g})")
    if cert.conditioning > 1e4:
        log.warning("1 + Hg is nearly singular: conditioning %.3g", cert.conditioning)
    return Spectrum(G.grid, G.values / (1.0 + G.values)), cert


def wiener_levy_eta(g: SampledFunction, params: TransformParams,
                    threshold: float = DEFAULT_THRESHOLD) -> SampledFunction:
    """eta with H eta = Hg / (1 + Hg)."""
    ratio, _ = _symbol_ratio(g, params, threshold)
    return h_inverse(ratio, params, g.grid)


def wiener_levy_ell(g: SampledFunction, params: TransformParams,
                    threshold: float = DEFAULT_THRESHOLD) -> SampledFunction:
    """ell with H ell = -Hg / (1 + Hg); ell is exactly -eta."""
    return -wiener_levy_eta(g, params, threshold)


def neumann_terms(max_abs_symbol: float, tolerance: float, cap: int = 200) -> int:
    """Smallest M with s^{M+1} / (1 - s) <= tolerance for s = sup|Hg| < 1."""
    s = max_abs_symbol
    if not 0.0 <= s < 1.0:
        raise ValueError("Neumann series needs sup|Hg| < 1")
    if s == 0.0:
        return 1
    for M in range(1, cap + 1):
        if s ** (M + 1) / (1.0 - s) <= tolerance:
            return M
    raise ValueError("Neumann series converges too slowly")


def neumann_eta_symbol(g: SampledFunction, params: TransformParams, M: int) -> Spectrum:
    """Transform of sum_{m=1}^{M} (-1)^{m+1} g^{*m}, built as a power series in Hg."""
    G = h_forward(g, params)
    acc = np.zeros_like(G.values)
    term = np.ones_like(G.values)
    for m in range(1, M + 1):
        term = term * G.values
        acc += (-1) ** (m + 1) * term
    return Spectrum(G.grid, acc)
