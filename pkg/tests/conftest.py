import random

import pytest
from hypothesis import settings, strategies as st

from infhecke.scalars import Poly, RatFunc
from infhecke.specht import SpechtVector
from infhecke.tableaux import enumerate_by_inv

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile("ci")

SMALL_PARTITIONS = [(), (1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1)]


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def polys(draw, max_deg=3):
    return Poly(draw(st.lists(small_ints, min_size=1, max_size=max_deg + 1)))


@st.composite
def ratfuncs(draw, nonzero=False):
    num = draw(polys())
    den = draw(polys().filter(lambda p: not p.is_zero()))
    shift = draw(st.integers(min_value=-2, max_value=2))
    f = RatFunc(num, den) * RatFunc.t_power(shift)
    if nonzero and f.is_zero():
        f = RatFunc(1)
    return f


def random_ratfunc(rng: random.Random) -> RatFunc:
    num = Poly([rng.randint(-3, 3) for _ in range(3)])
    den = Poly([rng.choice([1, 2, -1])] + [rng.randint(-2, 2) for _ in range(2)])
    return RatFunc(num, den) * RatFunc.t_power(rng.randint(-1, 1))


def random_vector(lam, rng: random.Random, max_inv: int = 3, terms: int = 3) -> SpechtVector:
    basis = enumerate_by_inv(lam, max_inv)
    chosen = rng.sample(basis, min(terms, len(basis)))
    return SpechtVector(tuple(lam), {tau: random_ratfunc(rng) for tau in chosen})


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
