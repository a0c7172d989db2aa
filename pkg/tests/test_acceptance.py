"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from abeldt import verify

RESULTS: list = []

CRITERIA = [
    ("1 a-coefficients", verify.check_a_coefficients),
    ("2 rank-one anchor", verify.check_rank_one_anchor),
    ("3 beta=0 closed form", verify.check_beta_zero),
    ("4 orbit invariance", verify.check_orbit_invariance),
    ("5 wall-crossing consistency", verify.check_wallcross_consistency),
    ("6 spin solver", verify.check_spin),
    ("7 SL2 representation", verify.check_sl2),
    ("8 decomposition oracle", verify.check_decomposition_oracle),
    ("9 ring axioms", verify.check_ring),
    ("10 wall geometry", verify.check_walls),
]


@pytest.mark.parametrize("label,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, check):
    result = check()
    line = f"[{label}] {result.line()}"
    RESULTS.append(line)
    print(line)
    for d in result.details[:10]:
        print("   ", d)
    assert result.passed, line
