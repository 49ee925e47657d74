"""Fredholm convolution equation and the 1-D heat Cauchy problem."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import YoungExponents, young_constant
from .convolution import ConvMethod, convolve, convolve_direct, convolve_spectral
from .errors import InvalidExponent, InvalidParams, InvalidTime
from .grid import Grid, SampledFunction, Spectrum, TransformParams, lp_norm
from .report import VerificationReport
from .transform import h_forward, h_inverse
from .wiener_levy import DEFAULT_THRESHOLD, wiener_levy_eta


@dataclass(frozen=True)
class FredholmProblem:
    """f + f*g = g*k_rhs (lambda fixed at 1)."""

    g: SampledFunction
    k_rhs: SampledFunction
    params: TransformParams


@dataclass(frozen=True)
class HeatProblem:
    """k u_xx = u_t on the line with u(x, 0) = initial."""

    diffusion: float
    time: float
    initial: SampledFunction
    params: TransformParams

    def __post_init__(self):
        if not self.diffusion > 0:
            raise InvalidParams(f"diffusion must be positive, got {self.diffusion}")
        if not self.time >= 0:
            raise InvalidTime(f"time must be >= 0, got {self.time}")

    def at(self, t: float) -> "HeatProblem":
        return HeatProblem(self.diffusion, t, self.initial, self.params)


# Fredholm


def solve_fredholm(prob: FredholmProblem,
                   threshold: float = DEFAULT_THRESHOLD) -> SampledFunction:
    """f = eta * k_rhs with H eta = Hg / (1 + Hg); raises SingularSymbol."""
    eta = wiener_levy_eta(prob.g, prob.params, threshold)
    return convolve_spectral(eta, prob.k_rhs, prob.params)


def solve_fredholm_transform(prob: FredholmProblem) -> SampledFunction:
    """Same solution by dividing on the transform side, without forming eta."""
    p = prob.params
    G = h_forward(prob.g, p)
    K = h_forward(prob.k_rhs, p)
    return h_inverse(Spectrum(G.grid, G.values * K.values / (1.0 + G.values)), p, prob.g.grid)


def fredholm_residual(prob: FredholmProblem, f: SampledFunction) -> float:
    """||f + f*g - g*k||_1 / max(||g*k||_1, 1e-30), convolutions by direct quadrature."""
    rhs = convolve_direct(prob.g, prob.k_rhs, prob.params)
    res = f + convolve_direct(f, prob.g, prob.params) - rhs
    return lp_norm(res, 1) / max(lp_norm(rhs, 1), 1e-30)


def fredholm_report(prob: FredholmProblem, tolerance: float = 1e-6,
                    threshold: float = DEFAULT_THRESHOLD) -> list[VerificationReport]:
    p = prob.params
    eta = wiener_levy_eta(prob.g, p, threshold)
    f = convolve_spectral(eta, prob.k_rhs, p)
    bound = p.l1_constant * lp_norm(eta, 1) * lp_norm(prob.k_rhs, 1)
    return [
        VerificationReport.discrepancy("fredholm_residual", fredholm_residual(prob, f), tolerance),
        VerificationReport.upper("fredholm_l1_bound", lp_norm(f, 1), bound,
                                 1e-12 * max(bound, 1.0)),
    ]


# heat


def gaussian_kernel(t: float, k: float, grid: Grid) -> SampledFunction:
    """Samples of exp(-x^2/(4kt)) / sqrt(kt)."""
    if not t > 0:
        raise InvalidTime(f"the heat Gaussian needs t > 0, got {t}")
    if not k > 0:
        raise InvalidParams(f"diffusion must be positive, got {k}")
    kt = k * t
    return grid.sample(lambda x: np.exp(-x**2 / (4.0 * kt)) / math.sqrt(kt))


def gaussian_lp_norm(t: float, k: float, p: float) -> float:
    """Closed form 2^{1/p} (pi/p)^{1/(2p)} (kt)^{-(p-1)/(2p)}; p = inf gives the peak."""
    if not p >= 1:
        raise InvalidExponent(f"p must be >= 1, got {p}")
    if not t > 0:
        raise InvalidTime(f"t must be positive, got {t}")
    kt = k * t
    if math.isinf(p):
        return 1.0 / math.sqrt(kt)
    return 2.0 ** (1 / p) * (math.pi / p) ** (1 / (2 * p)) * kt ** (-(p - 1) / (2 * p))


def heat_spectrum(prob: HeatProblem) -> Spectrum:
    """U(y, t) = exp(-k t y^2) (H phi)(y)."""
    P = h_forward(prob.initial, prob.params)
    y = P.grid.nodes
    return Spectrum(P.grid, np.exp(-prob.diffusion * prob.time * y**2) * P.values)


def solve_heat_spectral(prob: HeatProblem) -> SampledFunction:
    prob.params.require_full_algebra("solve_heat_spectral")
    return h_inverse(heat_spectrum(prob), prob.params, prob.initial.grid)


def solve_heat_convolution(prob: HeatProblem,
                           method=ConvMethod.SPECTRAL) -> SampledFunction:
    """u = (g_t * phi) / (a sqrt 2); needs a != 0 and t > 0."""
    p = prob.params
    if p.a == 0.0:
        raise InvalidParams(
            "convolution form of the heat solution needs a != 0: for a = 0 the "
            "transform of the even heat Gaussian vanishes identically")
    if prob.time == 0:
        raise InvalidTime("convolution form needs t > 0 (heat Gaussian is singular at t = 0)")
    gt = gaussian_kernel(prob.time, prob.diffusion, prob.initial.grid)
    return convolve(gt, prob.initial, p, method) * (1.0 / (p.a * math.sqrt(2.0)))


def heat_estimate_report(prob: HeatProblem, p: float, q: float, r: float,
                         u: SampledFunction | None = None) -> VerificationReport:
    """Norm estimate for the convolution-form solution.

    ``p`` is the exponent of the heat Gaussian, ``q`` that of the datum.
    p = q = r = 1 gives the L1 case; otherwise 1/p + 1/q = 1 + 1/r with
    p, q > 1 (r = inf allowed).
    """
    params = prob.params
    exps = YoungExponents(p, q, r).check_convolution()
    if u is None:
        u = solve_heat_convolution(prob)
    phi = prob.initial
    if (p, q, r) == (1, 1, 1):
        case = "i"
        bound = (abs(params.c_minus) + 3 * params.c_plus) / (4 * params.a**2) * lp_norm(phi, 1)
    else:
        if not (p > 1 and q > 1):
            raise InvalidExponent("non-L1 cases need p, q > 1")
        case = "iii" if math.isinf(r) else "ii"
        bound = (young_constant(params, q) / (abs(params.a) * math.sqrt(2.0))
                 * gaussian_lp_norm(prob.time, prob.diffusion, p) * lp_norm(phi, q))
    measured = lp_norm(u, r)
    return VerificationReport.upper(
        f"heat_estimate_{case}(p={exps.p:g},q={exps.q:g},r={exps.r:g})",
        measured, bound, 1e-12 * max(bound, 1.0), case=case)
