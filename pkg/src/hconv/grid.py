"""Grids, trapezoid quadrature, norms and the sampled value types.

Every other module works on functions sampled on a symmetric uniform grid
with an odd number of nodes, so that ``x -> -x`` and the shifts ``x +- v``
of two nodes land exactly on nodes again.  Samples outside the grid are
treated as zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .errors import GridMismatch, InvalidExponent, InvalidGrid, InvalidParams

SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class TransformParams:
    """Kernel coefficients ``(a, b)`` of the transform and the dimension ``n``.

    Only ``a**2 + b**2 != 0`` is enforced at construction.  Operations that
    need the inverse kernel (1/a, 1/b) call :meth:`require_full_algebra`.
    """

    a: float
    b: float
    n: int = 1

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise InvalidParams(f"non-finite coefficients a={self.a}, b={self.b}")
        if a == 0.0 and b == 0.0:
            raise InvalidParams("a and b must not both vanish")
        if self.n != 1:
            raise InvalidParams("only dimension n=1 is implemented")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def c_minus(self) -> float:
        """Coefficient 3a^2 - b^2 of the unreflected shift."""
        return 3.0 * self.a**2 - self.b**2

    @property
    def c_plus(self) -> float:
        """Coefficient a^2 + b^2 of the three reflected shifts."""
        return self.a**2 + self.b**2

    @property
    def l1_constant(self) -> float:
        """(|3a^2-b^2| + 3(a^2+b^2)) / (4|a|(2pi)^{n/2}), the L1 product bound."""
        self.require_a()
        return (abs(self.c_minus) + 3.0 * self.c_plus) / (
            4.0 * abs(self.a) * (2.0 * math.pi) ** (self.n / 2)
        )

    @property
    def alpha(self) -> float:
        return math.sqrt(self.l1_constant)

    def require_a(self, what: str = "this operation"):
        if self.a == 0.0:
            raise InvalidParams(f"{what} requires a != 0")

    def require_full_algebra(self, what: str = "this operation"):
        if self.a == 0.0 or self.b == 0.0:
            raise InvalidParams(
                f"{what} requires a != 0 and b != 0 (inverse kernel has 1/a and 1/b)"
            )


@dataclass(frozen=True)
class Grid:
    """Uniform grid on ``[-L, L]`` with ``N`` (odd) nodes."""

    L: float
    N: int
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        L, N = self.L, self.N
        if isinstance(N, bool) or int(N) != N:
            raise InvalidGrid(f"N must be an integer, got {N!r}")
        N = int(N)
        if N < 3 or N % 2 == 0:
            raise InvalidGrid(f"N must be odd and >= 3, got {N}")
        if not (math.isfinite(L) and L > 0):
            raise InvalidGrid(f"L must be positive, got {L}")
        object.__setattr__(self, "L", float(L))
        object.__setattr__(self, "N", N)
        c = (N - 1) // 2
        # integer offsets keep the centre at exactly 0 and the set symmetric
        nodes = (np.arange(N) - c) * (2.0 * self.L / (N - 1))
        nodes.flags.writeable = False
        w = np.full(N, self.spacing)
        w[0] = w[-1] = 0.5 * self.spacing
        w.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", w)

    @property
    def spacing(self) -> float:
        return 2.0 * self.L / (self.N - 1)

    @property
    def center(self) -> int:
        return (self.N - 1) // 2

    def index_of(self, value: float, atol: float = 1e-9) -> int | None:
        """Index of the node equal to ``value`` (within ``atol`` spacings)."""
        k = (value + self.L) / self.spacing
        j = int(round(k))
        if 0 <= j < self.N and abs(k - j) <= atol:
            return j
        return None

    def sample(self, fn: Callable[[np.ndarray], np.ndarray]) -> "SampledFunction":
        return SampledFunction(self, np.asarray(fn(self.nodes), dtype=float))


def make_grid(L: float, N: int) -> Grid:
    return Grid(L, N)


class _Samples:
    """Shared behaviour of :class:`SampledFunction` and :class:`Spectrum`."""

    __slots__ = ("grid", "values")

    def __init__(self, grid: Grid, values):
        values = np.array(values, dtype=float)
        if values.ndim != 1 or values.shape[0] != grid.N:
            raise GridMismatch(
                f"expected {grid.N} samples, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("samples must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.grid != self.grid:
            raise GridMismatch(f"{self.grid} vs {other.grid}")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.grid, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.grid, self.values - other.values)

    def __mul__(self, c):
        if isinstance(c, _Samples):
            return NotImplemented
        return type(self)(self.grid, float(c) * self.values)

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(self.grid, -self.values)

    def __len__(self):
        return self.grid.N

    def __repr__(self):
        return f"{type(self).__name__}(grid={self.grid!r})"

    @classmethod
    def zeros(cls, grid: Grid):
        return cls(grid, np.zeros(grid.N))


class SampledFunction(_Samples):
    """Real samples of a function on the space grid."""

    __slots__ = ()

    def reflect(self) -> "SampledFunction":
        """Samples of ``x -> f(-x)`` (a node permutation since N is odd)."""
        return SampledFunction(self.grid, self.values[::-1])


class Spectrum(_Samples):
    """Real samples of a transform on the frequency grid."""

    __slots__ = ()


Samples = Union[SampledFunction, Spectrum]


def check_same_grid(*fs: Samples) -> Grid:
    grid = fs[0].grid
    for f in fs[1:]:
        if f.grid != grid:
            raise GridMismatch(f"{grid} vs {f.grid}")
    return grid


def integrate(values: np.ndarray, grid: Grid) -> float:
    """Composite trapezoid rule; fixed summation order."""
    return float(np.dot(grid.weights, values))


def lp_norm(f: Samples, p: float) -> float:
    """Trapezoid approximation of the L_p norm; ``p=inf`` gives the max."""
    if p == math.inf:
        return float(np.max(np.abs(f.values)))
    if not p >= 1:
        raise InvalidExponent(f"p must be >= 1, got {p}")
    a = np.abs(f.values)
    scale = float(a.max())
    if scale == 0.0:
        return 0.0
    # rescale so large p does not overflow
    return scale * integrate((a / scale) ** p, f.grid) ** (1.0 / p)


def alpha_norm(f: SampledFunction, params: TransformParams) -> float:
    """The scaled L1 norm under which the convolution is submultiplicative."""
    params.require_a("alpha_norm")
    return params.alpha * lp_norm(f, 1)


def outside_mass_fraction(f: Samples, inner: float | None = None) -> float:
    """Share of the L1 mass of ``f`` lying outside ``[-inner, inner]``.

    ``inner`` defaults to ``L/2``; used as a truncation diagnostic.
    """
    grid = f.grid
    if inner is None:
        inner = grid.L / 2
    a = np.abs(f.values)
    total = integrate(a, grid)
    if total == 0.0:
        return 0.0
    out = np.where(np.abs(grid.nodes) > inner, a, 0.0)
    return integrate(out, grid) / total
