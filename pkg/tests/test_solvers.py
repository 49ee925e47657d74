import math

import numpy as np
import pytest

from hconv import (
    ConvMethod,
    FredholmProblem,
    HeatProblem,
    InvalidParams,
    InvalidTime,
    SampledFunction,
    TransformParams,
    convolve_direct,
    h_forward,
    h_inverse,
    lp_norm,
    solve_fredholm,
    solve_heat_convolution,
    solve_heat_spectral,
)
from hconv.grid import Grid, Spectrum
from hconv.samples import gaussian
from hconv.solvers import (
    fredholm_report,
    fredholm_residual,
    gaussian_kernel,
    gaussian_lp_norm,
    heat_estimate_report,
    heat_spectrum,
    solve_fredholm_transform,
)

SQRT_PI = math.sqrt(math.pi)


def sup(x):
    return float(np.max(np.abs(x)))


@pytest.fixture(scope="module")
def fredholm(big_grid, hartley):
    return FredholmProblem(0.1 * gaussian(big_grid), gaussian(big_grid), hartley)


@pytest.fixture(scope="module")
def heat(big_grid, hartley):
    return HeatProblem(1.0, 0.75, gaussian(big_grid), hartley)


class TestFredholm:
    def test_zero_rhs(self, big_grid, hartley):
        prob = FredholmProblem(0.1 * gaussian(big_grid), SampledFunction.zeros(big_grid), hartley)
        assert sup(solve_fredholm(prob).values) == 0.0

    def test_zero_kernel(self, big_grid, hartley):
        prob = FredholmProblem(SampledFunction.zeros(big_grid), gaussian(big_grid), hartley)
        assert sup(solve_fredholm(prob).values) == 0.0

    def test_residual(self, fredholm):
        f = solve_fredholm(fredholm)
        assert fredholm_residual(fredholm, f) <= 1e-6

    def test_two_paths(self, fredholm, hartley):
        # independent oracle: divide on the transform side in place
        G = h_forward(fredholm.g, hartley).values
        K = h_forward(fredholm.k_rhs, hartley).values
        grid = fredholm.g.grid
        oracle = h_inverse(Spectrum(grid, G * K / (1 + G)), hartley)
        assert sup(solve_fredholm(fredholm).values - oracle.values) <= 1e-8
        assert sup(solve_fredholm_transform(fredholm).values - oracle.values) <= 1e-8

    def test_satisfies_equation_pointwise(self, fredholm, hartley):
        f = solve_fredholm(fredholm)
        lhs = f.values + convolve_direct(f, fredholm.g, hartley).values
        rhs = convolve_direct(fredholm.g, fredholm.k_rhs, hartley).values
        assert sup(lhs - rhs) <= 1e-8

    def test_report(self, fredholm):
        reports = fredholm_report(fredholm)
        assert [r.name for r in reports] == ["fredholm_residual", "fredholm_l1_bound"]
        assert all(r.passed for r in reports)


class TestGaussianKernel:
    def test_quarter(self, big_grid):
        g = gaussian_kernel(0.25, 1.0, big_grid)
        assert sup(g.values - gaussian(big_grid).values) <= 1e-15

    def test_peak(self, big_grid):
        g = gaussian_kernel(0.7, 2.0, big_grid)
        assert g.values[big_grid.center] == pytest.approx(1 / math.sqrt(1.4), rel=1e-15)

    @pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
    def test_l1_norm(self, t):
        grid = Grid(40.0, 4097)
        assert abs(lp_norm(gaussian_kernel(t, 1.0, grid), 1) - 2 * SQRT_PI) <= 1e-6

    def test_l1_independent_of_t(self):
        grid = Grid(40.0, 4097)
        vals = [lp_norm(gaussian_kernel(t, 1.0, grid), 1) for t in (0.1, 1.0, 10.0)]
        assert max(vals) - min(vals) <= 1e-8

    @pytest.mark.parametrize("t", [0.0, -1.0])
    def test_time_positive(self, big_grid, t):
        with pytest.raises(InvalidTime):
            gaussian_kernel(t, 1.0, big_grid)


class TestGaussianLpNorm:
    def test_p1(self):
        assert gaussian_lp_norm(3.0, 0.5, 1) == pytest.approx(2 * SQRT_PI, rel=1e-15)

    def test_p2_closed_form(self, big_grid):
        expected = 2 ** 0.5 * (math.pi / 2) ** 0.25 * 0.25 ** -0.25
        assert gaussian_lp_norm(0.25, 1.0, 2) == pytest.approx(expected, rel=1e-15)
        assert lp_norm(gaussian_kernel(0.25, 1.0, big_grid), 2) == pytest.approx(
            expected, abs=1e-6)

    def test_doubling_kt(self):
        assert gaussian_lp_norm(0.5, 1.0, 2) / gaussian_lp_norm(0.25, 1.0, 2) == pytest.approx(
            2 ** -0.25, rel=1e-15)

    def test_sup(self):
        assert gaussian_lp_norm(0.25, 1.0, math.inf) == pytest.approx(2.0)

    @pytest.mark.parametrize("p", [1.5, 3.0])
    def test_matches_quadrature(self, big_grid, p):
        assert lp_norm(gaussian_kernel(0.5, 1.0, big_grid), p) == pytest.approx(
            gaussian_lp_norm(0.5, 1.0, p), abs=1e-9)


class TestHeat:
    def test_initial_time(self, heat, big_grid):
        u0 = solve_heat_spectral(heat.at(0.0))
        assert sup(u0.values - heat.initial.values) <= 5e-5

    def test_closed_form(self, heat, big_grid):
        u = solve_heat_spectral(heat)
        assert sup(u.values - np.exp(-big_grid.nodes**2 / 4)) <= 2e-5

    def test_zero_initial(self, big_grid, hartley):
        prob = HeatProblem(1.0, 0.75, SampledFunction.zeros(big_grid), hartley)
        assert sup(solve_heat_spectral(prob).values) == 0.0
        assert sup(solve_heat_convolution(prob).values) == 0.0

    @pytest.mark.parametrize("method", list(ConvMethod))
    def test_convolution_form_agrees(self, heat, method):
        u1 = solve_heat_spectral(heat)
        u2 = solve_heat_convolution(heat, method)
        assert sup(u1.values - u2.values) <= 1e-5

    def test_a_zero_rejected(self, big_grid):
        prob = HeatProblem(1.0, 0.75, gaussian(big_grid), TransformParams(0, 1))
        with pytest.raises(InvalidParams, match="a != 0"):
            solve_heat_convolution(prob)

    def test_a_zero_spectral_still_works(self, big_grid):
        prob = HeatProblem(1.0, 0.75, gaussian(big_grid), TransformParams(0, 1))
        U = heat_spectrum(prob)
        assert np.all(np.isfinite(U.values))

    def test_convolution_rejects_t0(self, heat):
        with pytest.raises(InvalidTime):
            solve_heat_convolution(heat.at(0.0))

    @pytest.mark.parametrize("kw", [dict(diffusion=0.0, time=1.0), dict(diffusion=1.0, time=-1.0)])
    def test_problem_validation(self, big_grid, hartley, kw):
        with pytest.raises((InvalidTime, InvalidParams)):
            HeatProblem(initial=gaussian(big_grid), params=hartley, **kw)

    def test_semigroup(self, heat, hartley):
        u1 = solve_heat_spectral(heat.at(0.3))
        u12 = solve_heat_spectral(HeatProblem(1.0, 0.45, u1, hartley))
        assert sup(u12.values - solve_heat_spectral(heat).values) <= 1e-5

    def test_transform_ode(self, heat, hartley, big_grid):
        dt = 1e-4
        up = h_forward(solve_heat_spectral(heat.at(heat.time + dt)), hartley).values
        um = h_forward(solve_heat_spectral(heat.at(heat.time - dt)), hartley).values
        U = heat_spectrum(heat).values
        rhs = -heat.diffusion * big_grid.nodes**2 * U
        mask = np.abs(rhs) > 1e-6 * np.max(np.abs(rhs))
        rel = np.abs((up - um) / (2 * dt) - rhs)[mask] / np.abs(rhs[mask])
        assert rel.max() <= 1e-3


class TestHeatEstimates:
    def test_case_i(self, heat):
        rep = heat_estimate_report(heat, 1, 1, 1)
        assert rep.passed
        assert rep.bound == pytest.approx(4 * SQRT_PI, abs=1e-6)

    def test_zero(self, big_grid, hartley):
        prob = HeatProblem(1.0, 0.75, SampledFunction.zeros(big_grid), hartley)
        rep = heat_estimate_report(prob, 1, 1, 1)
        assert rep.passed and rep.measured == 0.0

    def test_case_iii(self, heat):
        assert heat_estimate_report(heat, 2, 2, math.inf).passed

    def test_case_ii(self, heat):
        assert heat_estimate_report(heat, 4 / 3, 4 / 3, 2).passed
