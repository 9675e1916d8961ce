"""Compare the character formula with brute-force enumeration on one surface."""

import argparse
import itertools
import time
from dataclasses import dataclass

from hurwitz_atlas.core import partitions_of
from hurwitz_atlas.engine import SurfaceSignature, hurwitz_e
from hurwitz_atlas.oracle import FactorizationProblem, enumeration_size, oracle_hurwitz


@dataclass
class Config:
    surface: str = "klein"
    max_degree: int = 4
    max_profiles: int = 2
    budget: int = 10**7


def main(cfg: Config) -> int:
    surface = SurfaceSignature.parse(cfg.surface)
    checked = skipped = mismatches = 0
    start = time.perf_counter()
    for d in range(1, cfg.max_degree + 1):
        for f in range(cfg.max_profiles + 1):
            for profs in itertools.combinations_with_replacement(partitions_of(d), f):
                prob = FactorizationProblem(surface, profs, d)
                if enumeration_size(prob) > cfg.budget:
                    skipped += 1
                    continue
                a, b = hurwitz_e(surface.euler_char, profs, d), oracle_hurwitz(prob)
                checked += 1
                if a != b:
                    mismatches += 1
                    print(f"d={d} {[str(p) for p in profs]}: engine {a}, oracle {b}")
    elapsed = time.perf_counter() - start
    print(f"{surface} (e={surface.euler_char}): {checked} checked, {skipped} over budget, "
          f"{mismatches} mismatches, {elapsed:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--surface", default=Config.surface)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    ap.add_argument("--max-profiles", type=int, default=Config.max_profiles)
    ap.add_argument("--budget", type=int, default=Config.budget)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
