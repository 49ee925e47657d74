"""Direct O(N^2) quadrature against the spectral path; writes a CSV table."""

from __future__ import annotations

import sys
from dataclasses import dataclass

from _common import parse_config

from hconv import RunConfig
from hconv.bench import bench, to_csv


@dataclass
class BenchConfig:
    a: float = 1.0
    b: float = 1.0
    L: float = 20.0
    sizes: str = "257,513,1025,2049,4097"
    repeats: int = 5
    seed: int = 0
    output: str = ""


def main() -> int:
    cfg = parse_config(BenchConfig, __doc__)
    sizes = [int(s) for s in cfg.sizes.split(",") if s.strip()]
    rows = bench(RunConfig(a=cfg.a, b=cfg.b, L=cfg.L, seed=cfg.seed), sizes, cfg.repeats)
    text = to_csv(rows)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    for prev, cur in zip(rows, rows[1:]):
        growth = cur["direct_time"] / prev["direct_time"]
        expected = (cur["N"] / prev["N"]) ** 2
        print(f"# N {prev['N']} -> {cur['N']}: direct time x{growth:.1f} (N^2 predicts x{expected:.1f})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
