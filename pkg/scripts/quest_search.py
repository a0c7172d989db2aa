"""Search decomposable rank-one classes for solutions landing strictly between the slopes.

    python scripts/quest_search.py --beta-max 10 --n-max 100 --bound 40
"""

import argparse

from abeldt.fm_rank1 import CurveClass, check_quest
from abeldt.semihomog import decompose


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--beta-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--bound", type=int, default=30)
    a = p.parse_args()
    checked = bad = 0
    for beta in range(0, a.beta_max + 1):
        for n in range(-a.n_max, a.n_max + 1):
            cc = CurveClass(beta, n)
            if (beta, n) == (0, 0) or not (beta or n > 0) or decompose(cc.as_gamma()) is None:
                continue
            rep = check_quest(cc, a.bound)
            checked += 1
            if not rep.ok:
                bad += 1
                print("counterexample candidate:", rep.to_json())
    print(f"{checked} decomposable classes scanned, {bad} flagged")


if __name__ == "__main__":
    main()
