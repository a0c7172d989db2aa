from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from abeldt.qseries import (QSeries, a_coefficients, a_value, conj_dt, n_beta_k, sigma2,
                            theta2, theta3)


def test_theta_leading_terms():
    t3 = theta3(40)
    assert (t3[0], t3[4], t3[16]) == (1, 2, 2)
    assert t3[8] == 0
    t2 = theta2(40)
    assert t2.valuation() == 1 and t2[1] == 2
    prod = theta2(40) ** 4 * theta3(40)
    assert prod.valuation() == 4 and prod[4] == 16


def test_a_display():
    a = a_coefficients(800)
    assert [a(n) for n in (-1, 0, 3, 4, 7, 8)] == [-1, 2, -8, 12, -39, 56]
    assert a.limit == 199
    assert a(-5) == 0
    with pytest.raises(IndexError):
        a(199)
    with pytest.raises(ValueError):
        a(Fraction(1, 2))


def test_a_support_mod_4():
    a = a_coefficients(800)
    assert all(a(n) == 0 for n in range(-1, a.limit) if n % 4 not in (0, 3))


def test_a_value_grows_cache():
    assert a_value(3) == -8
    assert a_value(500) == a_coefficients(4 * 503)(500)


def test_n_beta_k():
    assert n_beta_k(1, 1) == 1
    assert n_beta_k(0, 6) == sigma2(6) == 50
    assert n_beta_k(2, 2) == 5
    assert n_beta_k(2, 3) == 0
    with pytest.raises(ValueError):
        n_beta_k(1, 0)


def test_conj_dt_examples():
    assert conj_dt(1, 1) == 8
    assert conj_dt(0, 2) == Fraction(-5, 2)
    assert conj_dt(0, -3) == 0
    assert conj_dt(-2, 5) == 0
    assert conj_dt(7, 37) == 8
    with pytest.raises(ValueError):
        conj_dt(0, 0)


@pytest.mark.parametrize("n", range(1, 51))
def test_beta_zero_closed_form(n):
    assert conj_dt(0, n) == Fraction((-1) ** (n - 1) * sigma2(n), n)


@given(st.dictionaries(st.integers(1, 30), st.integers(-5, 5), max_size=6),
       st.sampled_from([1, -1, 2]))
def test_unit_inverse(tail, c0):
    f = QSeries({0: c0, **{k: v for k, v in tail.items() if v}}, 31)
    prod = f * f.inverse()
    assert prod.coeffs == {0: 1}


@given(st.integers(1, 8), st.integers(-60, 60))
def test_divisibility_guard_holds(beta, n):
    if n:
        conj_dt(beta, n)  # asserts k^2 | 4 beta^3 - n^2 internally
