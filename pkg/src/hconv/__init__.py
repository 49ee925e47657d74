"""Generalized Fourier cosine/sine transform, its convolution algebra and applications."""

from .algebra import (
    YoungExponents,
    conv_power,
    crude_constant,
    spectral_radius_gelfand,
    spectral_radius_trace,
    young_constant,
)
from .convolution import ConvMethod, convolve, convolve_direct, convolve_spectral, kernel_K
from .errors import (
    ExponentRelationViolated,
    FormatError,
    GridMismatch,
    HConvError,
    InvalidExponent,
    InvalidGrid,
    InvalidParams,
    InvalidTime,
    NodeNotOnGrid,
    SingularSymbol,
)
from .grid import (
    Grid,
    SampledFunction,
    Spectrum,
    TransformParams,
    alpha_norm,
    integrate,
    lp_norm,
    make_grid,
)
from .io import RunConfig, read_function, write_function
from .report import VerificationReport
from .solvers import (
    FredholmProblem,
    HeatProblem,
    solve_fredholm,
    solve_heat_convolution,
    solve_heat_spectral,
)
from .transform import TransformMethod, h_forward, h_inverse
from .wiener_levy import check_nonvanishing, wiener_levy_ell, wiener_levy_eta

__version__ = "0.1.0"

__all__ = [
    "YoungExponents",
    "conv_power",
    "crude_constant",
    "spectral_radius_gelfand",
    "spectral_radius_trace",
    "young_constant",
    "ConvMethod",
    "convolve",
    "convolve_direct",
    "convolve_spectral",
    "kernel_K",
    "ExponentRelationViolated",
    "FormatError",
    "GridMismatch",
    "HConvError",
    "InvalidExponent",
    "InvalidGrid",
    "InvalidParams",
    "InvalidTime",
    "NodeNotOnGrid",
    "SingularSymbol",
    "Grid",
    "SampledFunction",
    "Spectrum",
    "TransformParams",
    "alpha_norm",
    "integrate",
    "lp_norm",
    "make_grid",
    "RunConfig",
    "read_function",
    "write_function",
    "VerificationReport",
    "FredholmProblem",
    "HeatProblem",
    "solve_fredholm",
    "solve_heat_convolution",
    "solve_heat_spectral",
    "TransformMethod",
    "h_forward",
    "h_inverse",
    "check_nonvanishing",
    "wiener_levy_ell",
    "wiener_levy_eta",
]
