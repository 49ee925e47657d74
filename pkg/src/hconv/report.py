from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of one identity or inequality check.

    For inequalities ``measured <= bound`` the margin is ``bound - measured``
    and ``tolerance`` is the absolute slack granted to rounding.  Identity
    checks store the discrepancy as ``measured`` and the allowed discrepancy
    as both ``bound`` and ``tolerance``.
    """

    name: str
    measured: float
    bound: float
    margin: float
    passed: bool
    tolerance: float
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def upper(cls, name, measured, bound, tolerance=0.0, **details):
        """Report for ``measured <= bound (+ tolerance)``."""
        measured, bound = float(measured), float(bound)
        ok = math.isfinite(measured) and measured <= bound + tolerance
        return cls(name, measured, bound, bound - measured, bool(ok), float(tolerance), details)

    @classmethod
    def lower(cls, name, measured, floor, **details):
        """Report for ``measured > floor``."""
        measured, floor = float(measured), float(floor)
        return cls(name, measured, floor, measured - floor, bool(measured > floor), 0.0, details)

    @classmethod
    def discrepancy(cls, name, measured, tolerance, **details):
        measured = float(measured)
        ok = math.isfinite(measured) and measured <= tolerance
        return cls(name, measured, float(tolerance), tolerance - measured, bool(ok),
                   float(tolerance), details)

    def to_dict(self) -> dict[str, Any]:
        d = {
            "name": self.name,
            "measured": self.measured,
            "bound": self.bound,
            "margin": self.margin,
            "pass": self.passed,
            "tolerance": self.tolerance,
        }
        if self.details:
            d["details"] = _jsonable(self.details)
        return d

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (f"[{flag}] {self.name}: measured={self.measured:.6g} "
                f"bound={self.bound:.6g} margin={self.margin:.3g}")

    def __bool__(self):
        return self.passed


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "tolist"):
        return x.tolist()
    return x


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)
