"""Compare decompose against forward enumeration on a box and tabulate what splits.

    python scripts/decomposition_census.py --box 12
"""

import argparse
import collections
import itertools
import time

from abeldt.brute import enumerate_decompositions
from abeldt.gamma import GammaVector, discriminant
from abeldt.semihomog import decompose


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--box", type=int, default=10)
    box = p.parse_args().box
    t0 = time.perf_counter()
    truth = enumerate_decompositions(box)
    mismatches, alphas = 0, collections.Counter()
    for v in itertools.product(range(-box, box + 1), repeat=4):
        if not any(v):
            continue
        d = decompose(GammaVector(*v))
        if d != (truth[v][0] if v in truth else None):
            mismatches += 1
        if d is not None:
            alphas[d.alpha] += 1
            assert discriminant(GammaVector(*v)) < 0
    print(f"box {box}: {sum(alphas.values())} splittable vectors, {mismatches} mismatches, "
          f"{time.perf_counter() - t0:.1f}s")
    print("alpha histogram:", dict(sorted(alphas.items())))


if __name__ == "__main__":
    main()
