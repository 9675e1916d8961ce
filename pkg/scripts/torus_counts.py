"""Unbranched covers of the torus: engine values against the partition counts."""

import argparse
from dataclasses import dataclass

from hurwitz_atlas.core import partition_count
from hurwitz_atlas.engine import SurfaceSignature, hurwitz_e
from hurwitz_atlas.oracle import FactorizationProblem, oracle_hurwitz


@dataclass
class Config:
    max_degree: int = 30
    oracle_degree: int = 6


def main(cfg: Config) -> int:
    torus = SurfaceSignature.torus()
    bad = 0
    print(f"{'d':>3} {'engine':>8} {'p(d)':>8} {'oracle':>8}")
    for d in range(1, cfg.max_degree + 1):
        value = hurwitz_e(torus.euler_char, (), d)
        oracle = oracle_hurwitz(FactorizationProblem(torus, (), d)) if d <= cfg.oracle_degree else "-"
        ok = value == partition_count(d) and oracle in ("-", value)
        bad += not ok
        print(f"{d:>3} {str(value):>8} {partition_count(d):>8} {str(oracle):>8}{'' if ok else '  MISMATCH'}")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    ap.add_argument("--oracle-degree", type=int, default=Config.oracle_degree)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
