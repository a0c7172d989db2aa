from math import gcd

from hypothesis import HealthCheck, settings, strategies as st

from abeldt.gamma import S, SL2Matrix, GammaVector, IDENTITY
from abeldt.semihomog import SemihomClass

settings.register_profile("default", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def gamma_vectors(lo=-50, hi=50):
    c = st.integers(lo, hi)
    return st.builds(GammaVector, c, c, c, c)


nonzero_gamma = gamma_vectors().filter(lambda v: not v.is_zero())


@st.composite
def sl2_words(draw, max_len=12):
    """Products of T^k and S, the generators of SL2(Z)."""
    g = IDENTITY
    for k in draw(st.lists(st.integers(-3, 3), max_size=max_len)):
        g = g @ SL2Matrix(1, k, 0, 1) @ S
    return g


@st.composite
def semihom_classes(draw, pmax=4, qmax=5, rmax=4):
    r = draw(st.integers(-rmax, rmax).filter(bool))
    if draw(st.integers(0, 9)) == 0:
        return SemihomClass(0, 1, r)
    p = draw(st.integers(1, pmax))
    q = draw(st.integers(-qmax, qmax).filter(lambda q: gcd(p, q) == 1))
    return SemihomClass(p, q, r)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
