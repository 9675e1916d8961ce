"""Table of one-branch-point Hurwitz numbers of the projective plane.

Prints every coefficient of sum_lam s_lam through the chosen degree together
with its connected counterpart from the logarithm.
"""

import argparse
from dataclasses import dataclass

from hurwitz_atlas.genfun import bkp_vacuum_series, rp2_single_branch_table
from hurwitz_atlas.symfun import series_log


@dataclass
class Config:
    max_degree: int = 6
    only_nonzero: bool = False


def main(cfg: Config) -> int:
    table = rp2_single_branch_table(cfg.max_degree)
    connected = series_log(bkp_vacuum_series(cfg.max_degree))
    print(f"{'d':>3} {'profile':<14} {'H':>10} {'connected':>10}  euler'")
    for (d, delta), entry in table.items():
        if cfg.only_nonzero and not entry.value:
            continue
        print(f"{d:>3} {str(delta):<14} {str(entry.value):>10} {str(connected[delta]):>10}  {entry.inverse_h_power}")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    ap.add_argument("--only-nonzero", action="store_true")
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
