"""CSV function files and run configuration."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .errors import FormatError, GridMismatch, InvalidGrid, InvalidParams
from .grid import Grid, SampledFunction, TransformParams

HEADER = ("x", "value")

# documented tolerance ladder; overridable through RunConfig.tolerances
DEFAULT_TOLERANCES = {
    "method_equivalence": 1e-10,
    "round_trip": 5e-5,
    "commutativity": 1e-8,
    "cross_method": 1e-6,
    "factorization": 1e-5,
    "gaussian_identity": 1e-6,
    "wiener_levy_identity": 1e-8,
    "neumann": 1e-4,
    "fredholm_residual": 1e-6,
    "heat_agreement": 1e-5,
    "heat_closed_form": 2e-5,
    "radius_gap": 0.05,
    "nonvanishing_threshold": 1e-8,
}


def dump_function(f, fh) -> None:
    """Write samples as ``x,value`` rows with 17 significant digits to an open file."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(HEADER)
    for x, v in zip(f.grid.nodes, f.values):
        w.writerow((f"{x:.17g}", f"{v:.17g}"))


def write_function(path, f) -> None:
    with open(path, "w", newline="") as fh:
        dump_function(f, fh)


def read_function(path, grid: Grid | None = None, kind=SampledFunction):
    """Read a function file; the grid is reconstructed from the x column.

    ``kind`` may be :class:`Spectrum` for files holding transform samples.
    """
    xs, vs = [], []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise FormatError("empty file", 1) from None
        if tuple(h.strip() for h in header) != HEADER:
            raise FormatError(f"expected header 'x,value', got {','.join(header)!r}", 1)
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise FormatError(f"expected 2 columns, got {len(row)}", lineno)
            try:
                x, v = float(row[0]), float(row[1])
            except ValueError:
                raise FormatError(f"non-numeric entry {row!r}", lineno) from None
            if not (math.isfinite(x) and math.isfinite(v)):
                raise FormatError("non-finite entry", lineno)
            if xs and x <= xs[-1]:
                raise FormatError("x column is not strictly increasing", lineno)
            xs.append(x)
            vs.append(v)
    n = len(xs)
    if n < 3 or n % 2 == 0:
        raise GridMismatch(f"file has {n} rows; a grid needs an odd count >= 3")
    if grid is None:
        try:
            grid = Grid(-xs[0], n)
        except InvalidGrid as exc:
            raise GridMismatch(str(exc)) from None
    elif grid.N != n:
        raise GridMismatch(f"file has {n} rows, grid has N={grid.N}")
    tol = 1e-12 * max(1.0, grid.L)
    if np.max(np.abs(np.asarray(xs) - grid.nodes)) > tol:
        raise GridMismatch("x column does not reproduce the grid nodes")
    return kind(grid, vs)


@dataclass
class RunConfig:
    a: float = 1.0
    b: float = 1.0
    L: float = 20.0
    N: int = 2049
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    seed: int = 0

    def __post_init__(self):
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise InvalidParams(f"unknown tolerance names: {sorted(unknown)}")
        self.tolerances = {**DEFAULT_TOLERANCES, **self.tolerances}
        self.params  # validates a, b

    @property
    def params(self) -> TransformParams:
        return TransformParams(self.a, self.b)

    @property
    def grid(self) -> Grid:
        return Grid(self.L, self.N)

    def tol(self, name: str) -> float:
        return self.tolerances[name]

    @classmethod
    def from_file(cls, path, **overrides) -> "RunConfig":
        """Load a JSON config; non-None ``overrides`` win over file values."""
        data = json.loads(Path(path).read_text())
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise InvalidParams(f"unknown config keys: {sorted(extra)}")
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)

    def updated(self, **overrides) -> "RunConfig":
        vals = {f.name: getattr(self, f.name) for f in fields(self)}
        vals.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig(**vals)

