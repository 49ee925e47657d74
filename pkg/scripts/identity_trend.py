"""No unit element: truncated candidates e_R with He_R = 1 on |y| <= R.

e_R * f approaches f as R grows while ||e_R||_1 keeps growing, so no L1
element acts as the identity.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from _common import parse_config

from hconv import Grid, TransformParams
from hconv.algebra import identity_candidate_trend
from hconv.samples import gaussian


@dataclass
class TrendConfig:
    a: float = 1.0
    b: float = 1.0
    cutoffs: str = "0.5,1,2,4,8,16"
    L: float = 20.0
    N: int = 4097


def main() -> int:
    cfg = parse_config(TrendConfig, __doc__)
    rows = identity_candidate_trend(gaussian(Grid(cfg.L, cfg.N)), TransformParams(cfg.a, cfg.b),
                                    [float(c) for c in cfg.cutoffs.split(",")])
    print("cutoff,defect_sup,candidate_l1")
    for r in rows:
        print(f"{r['cutoff']:g},{r['defect_sup']:.3e},{r['candidate_l1']:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
