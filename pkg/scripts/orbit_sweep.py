"""Sweep rank-one classes through their Fourier-Mukai orbits.

    python scripts/orbit_sweep.py --beta-max 12 --n-max 80 --bound 30
"""

import argparse
import json
import time
from dataclasses import dataclass

from abeldt.fm_rank1 import orbit_sweep


@dataclass
class SweepConfig:
    beta_min: int = 1
    beta_max: int = 6
    n_max: int = 40
    bound: int = 20


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = SweepConfig(**vars(p.parse_args()))
    t0 = time.perf_counter()
    r = orbit_sweep(range(cfg.beta_min, cfg.beta_max + 1), range(-cfg.n_max, cfg.n_max + 1), cfg.bound)
    print(json.dumps({
        "config": vars(cfg),
        "pairs": r.pairs,
        "discriminant_failures": len(r.disc_failures),
        "invariance_checked": r.invariance_checked,
        "invariance_failures": len(r.invariance_failures),
        "consistency_checked": r.consistency_checked,
        "wall_cases": r.wall_cases,
        "consistency_failures": [v.to_json() for v in r.consistency_failures],
        "seconds": round(time.perf_counter() - t0, 2),
    }, indent=2))


if __name__ == "__main__":
    main()
