"""Convolution powers, spectral radius, characters and Young-type bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .convolution import convolve_direct, convolve_spectral
from .errors import ExponentRelationViolated, InvalidExponent, InvalidParams, NodeNotOnGrid
from .grid import (
    SampledFunction,
    Spectrum,
    TransformParams,
    alpha_norm,
    integrate,
    lp_norm,
    outside_mass_fraction,
)
from .report import VerificationReport
from .transform import h_forward, h_inverse

_REL = 1e-12


@dataclass(frozen=True)
class YoungExponents:
    """Exponents (p, q, r); ``q`` belongs to the first factor, ``p`` to the second."""

    p: float
    q: float
    r: float

    def _inv(self, x):
        return 0.0 if math.isinf(x) else 1.0 / x

    def check_trilinear(self):
        p, q, r = self.p, self.q, self.r
        if not all(1.0 < e < math.inf for e in (p, q, r)):
            raise ExponentRelationViolated("trilinear exponents must lie in (1, inf)")
        s = 1 / p + 1 / q + 1 / r
        if abs(s - 2.0) > 1e-12:
            raise ExponentRelationViolated(f"1/p + 1/q + 1/r = {s}, expected 2")
        return self

    def check_convolution(self):
        p, q, r = self.p, self.q, self.r
        if not all(e >= 1.0 for e in (p, q, r)):
            raise ExponentRelationViolated("exponents must be >= 1")
        lhs = self._inv(p) + self._inv(q)
        rhs = 1.0 + self._inv(r)
        if abs(lhs - rhs) > 1e-12:
            raise ExponentRelationViolated(f"1/p + 1/q = {lhs} but 1 + 1/r = {rhs}")
        return self


@dataclass
class RadiusTrace:
    k_max: int
    roots: np.ndarray
    gelfand_value: float
    outside_mass: float = 0.0
    details: dict = field(default_factory=dict)

    def relative_gap(self, k: int | None = None) -> float:
        k = self.k_max if k is None else k
        if self.gelfand_value == 0.0:
            return 0.0 if self.roots[k - 1] == 0.0 else math.inf
        return abs(self.roots[k - 1] - self.gelfand_value) / self.gelfand_value


def conv_power(f: SampledFunction, k: int, params: TransformParams) -> SampledFunction:
    """k-th convolution power, computed as the inverse transform of (Hf)^k."""
    params.require_full_algebra("conv_power")
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    F = h_forward(f, params)
    return h_inverse(Spectrum(F.grid, F.values ** int(k)), params, f.grid)


def conv_power_repeated(f: SampledFunction, k: int, params: TransformParams) -> SampledFunction:
    """k-th power by k-1 successive spectral convolutions (cross-check path)."""
    out = f
    for _ in range(int(k) - 1):
        out = convolve_spectral(f, out, params)
    return out


def spectral_radius_gelfand(f: SampledFunction, params: TransformParams) -> float:
    return lp_norm(h_forward(f, params), math.inf)


def spectral_radius_trace(f: SampledFunction, params: TransformParams,
                          k_max: int = 20) -> RadiusTrace:
    """roots[k-1] = ||f^{*k}||_alpha^{1/k} for k = 1..k_max.

    ``outside_mass`` is the largest share of L1 mass of any power lying
    outside [-L/2, L/2]; powers spread with k, so callers should keep it
    below ~1e-10 by widening the grid.
    """
    params.require_full_algebra("spectral_radius_trace")
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    F = h_forward(f, params)
    power = np.ones_like(F.values)
    roots = np.empty(k_max)
    worst_outside = 0.0
    for k in range(1, k_max + 1):
        power = power * F.values
        fk = h_inverse(Spectrum(F.grid, power), params, f.grid)
        roots[k - 1] = alpha_norm(fk, params) ** (1.0 / k)
        worst_outside = max(worst_outside, outside_mass_fraction(fk))
    return RadiusTrace(k_max, roots, lp_norm(F, math.inf), worst_outside)


def character_eval(f: SampledFunction, y: float, params: TransformParams) -> float:
    """Character at frequency ``y``: the value (Hf)(y) at a node of the frequency grid."""
    j = f.grid.index_of(y)
    if j is None:
        raise NodeNotOnGrid(f"y={y} is not a frequency node")
    return float(h_forward(f, params).values[j])


def young_constant(params: TransformParams, q: float, n: int = 1) -> float:
    """Sharp constant (|a|(2pi)^{n/2})^{-1} ((|3a^2-b^2|^q + 3(a^2+b^2)^q)/4)^{1/q}."""
    if params.a == 0.0:
        raise InvalidParams("young_constant requires a != 0")
    if not q >= 1:
        raise InvalidExponent(f"q must be >= 1, got {q}")
    if math.isinf(q):
        mean = max(abs(params.c_minus), params.c_plus)
    else:
        # factor out the largest term so large q does not overflow
        m = max(abs(params.c_minus), params.c_plus)
        mean = m * (((abs(params.c_minus) / m) ** q + 3.0 * (params.c_plus / m) ** q) / 4.0) ** (1.0 / q)
    return mean / (abs(params.a) * (2.0 * math.pi) ** (n / 2))


def crude_constant(params: TransformParams, r: float) -> float:
    """Triangle-inequality constant (|3a^2-b^2|^r + 3(a^2+b^2)^r) / (4|a|)."""
    params.require_a("crude_constant")
    return (abs(params.c_minus) ** r + 3.0 * params.c_plus ** r) / (4.0 * abs(params.a))


def verify_young_conv(f: SampledFunction, g: SampledFunction, exps: YoungExponents,
                      params: TransformParams, conv: SampledFunction | None = None,
                      ) -> VerificationReport:
    """||f*g||_r <= C(q) ||f||_q ||g||_p with f*g from direct quadrature."""
    exps.check_convolution()
    if conv is None:
        conv = convolve_direct(f, g, params)
    lhs = lp_norm(conv, exps.r)
    rhs = young_constant(params, exps.q) * lp_norm(f, exps.q) * lp_norm(g, exps.p)
    return VerificationReport.upper(
        f"young_conv(p={exps.p:g},q={exps.q:g},r={exps.r:g})", lhs, rhs,
        _REL * max(rhs, 1.0))


def verify_young_trilinear(f: SampledFunction, g: SampledFunction, h: SampledFunction,
                           exps: YoungExponents, params: TransformParams,
                           conv: SampledFunction | None = None) -> VerificationReport:
    """|int (f*g) h| <= C(q) ||f||_q ||g||_p ||h||_r."""
    exps.check_trilinear()
    if conv is None:
        conv = convolve_direct(f, g, params)
    lhs = abs(integrate(conv.values * h.values, f.grid))
    rhs = (young_constant(params, exps.q) * lp_norm(f, exps.q) * lp_norm(g, exps.p)
           * lp_norm(h, exps.r))
    return VerificationReport.upper(
        f"young_trilinear(p={exps.p:g},q={exps.q:g},r={exps.r:g})", lhs, rhs,
        _REL * max(rhs, 1.0))


def verify_l1_product_bound(f: SampledFunction, g: SampledFunction, params: TransformParams,
                            conv: SampledFunction | None = None) -> VerificationReport:
    if conv is None:
        conv = convolve_direct(f, g, params)
    lhs = lp_norm(conv, 1)
    rhs = params.l1_constant * lp_norm(f, 1) * lp_norm(g, 1)
    return VerificationReport.upper("l1_product_bound", lhs, rhs, _REL * max(rhs, 1.0))


def verify_submultiplicative(f: SampledFunction, g: SampledFunction, params: TransformParams,
                             conv: SampledFunction | None = None) -> VerificationReport:
    if conv is None:
        conv = convolve_direct(f, g, params)
    lhs = alpha_norm(conv, params)
    rhs = alpha_norm(f, params) * alpha_norm(g, params)
    return VerificationReport.upper("submultiplicative", lhs, rhs, _REL * max(rhs, 1.0))


def crude_constant_compare(params: TransformParams, r: float) -> VerificationReport:
    """Sharp constant versus the crude four-term constant at exponent r.

    The sharp constant grows with q and admissible q satisfy 1 <= q <= r,
    so it is evaluated at q = r, the least favourable choice.
    """
    if not r >= 1:
        raise InvalidExponent(f"r must be >= 1, got {r}")
    sharp = young_constant(params, r)
    crude = crude_constant(params, r)
    return VerificationReport.upper(
        f"sharp_vs_crude(a={params.a:g},b={params.b:g},r={r:g})", sharp, crude, 0.0,
        q_used=r)


def identity_candidate_trend(f: SampledFunction, params: TransformParams,
                             cutoffs) -> list[dict]:
    """Diagnostic for the missing unit element.

    For each cutoff R the candidate e_R has transform 1 on |y| <= R and 0
    elsewhere.  Records sup|e_R * f - f| and ||e_R||_1: the defect only
    shrinks while the L1 norm of the candidate keeps growing.
    """
    params.require_full_algebra("identity_candidate_trend")
    F = h_forward(f, params)
    y = F.grid.nodes
    rows = []
    for R in cutoffs:
        mask = (np.abs(y) <= R).astype(float)
        e = h_inverse(Spectrum(F.grid, mask), params, f.grid)
        ef = h_inverse(Spectrum(F.grid, mask * F.values), params, f.grid)
        rows.append({
            "cutoff": float(R),
            "defect_sup": float(np.max(np.abs(ef.values - f.values))),
            "candidate_l1": lp_norm(e, 1),
        })
    return rows
