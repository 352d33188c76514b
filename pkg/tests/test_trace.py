import json
import random

import pytest
from hypothesis import given, strategies as st

from infhecke.hecke import HeckeElement, Permutation, act_on_specht, t_sigma, theta_element
from infhecke.scalars import ONE, T, ZERO, LaurentTrunc, one_minus_t_power, truncate
from infhecke.specht import SpechtVector, act_theta
from infhecke.tableaux import StableSYT, enumerate_by_inv, inv, inversion_pairs, tau_lambda
from infhecke.trace import (
    ProductGuess,
    a_weight,
    a_weight_recursive,
    gamma_theta,
    gamma_theta_operator,
    gamma_trunc,
    gamma_weight,
    gamma_weight_series,
    inner_product,
    integrality_check,
    rational_guess,
    rescale_factor,
    rescaled_basis,
    self_adjointness_check,
    skew_vanishing_check,
    adjointness_check,
)

from conftest import random_vector


def oracle_trace(lam, X, K):
    """Exact sum of (X e~_tau, e~_tau) over inv <= K, truncated afterwards."""
    total = ZERO
    for tau in enumerate_by_inv(lam, K):
        et = rescaled_basis(tau)
        total = total + inner_product(act_on_specht(X, et), et)
    return truncate(total, K)


# -- weights -----------------------------------------------------------------

def test_a_weight_examples():
    assert a_weight(tau_lambda((2, 1))) == ONE
    tau = StableSYT.from_rows((2, 1), [[1, 2, 3], [4, 6], [5]])
    # product over the pairs with gaps 2, 2, 3, 3, 4
    expected = (
        T**5
        * ((1 - T) * (1 - T**3) / (1 - T**2) ** 2) ** 2
        * ((1 - T**2) * (1 - T**4) / (1 - T**3) ** 2) ** 2
        * ((1 - T**3) * (1 - T**5) / (1 - T**4) ** 2)
    )
    assert a_weight(tau) == expected
    # the reduced form: (1 - t^3) ends up in the denominator
    assert expected == T**5 * (1 - T) ** 2 * (1 - T**5) / ((1 - T**2) ** 2 * (1 - T**3))


def test_a_weight_recursion_and_valuation():
    for lam in [(), (1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1)]:
        for tau in enumerate_by_inv(lam, 5):
            a = a_weight(tau)
            assert a_weight_recursive(tau, "first") == a
            assert a_weight_recursive(tau, "last") == a
            assert a.valuation() == inv(tau)


def test_rescale_examples():
    assert rescale_factor(tau_lambda((1,))) == ONE
    tau = StableSYT.from_rows((1,), [[1, 2], [3]])
    assert rescale_factor(tau) == (1 - T**2) / (1 - T**3)


def test_gamma_weight_closed_form():
    for lam in [(1,), (2, 1), (1, 1, 1)]:
        for tau in enumerate_by_inv(lam, 4):
            closed = T ** inv(tau)
            for *_, g in inversion_pairs(tau):
                closed = closed * one_minus_t_power(g - 1) / one_minus_t_power(g + 1)
            assert gamma_weight(tau) == closed
            assert gamma_weight(tau) == a_weight(tau) * rescale_factor(tau) ** 2
            assert gamma_weight_series(tau, 12).agrees_with(truncate(closed, 11))


# -- inner product -----------------------------------------------------------

def test_inner_product_examples():
    basis = enumerate_by_inv((2, 1), 2)
    for x in basis:
        for y in basis:
            val = inner_product(SpechtVector.basis(x), SpechtVector.basis(y))
            if x != y:
                assert val == ZERO
    tl = SpechtVector.basis(tau_lambda((2, 1)))
    assert inner_product(tl, tl) == ONE
    with pytest.raises(ValueError):
        inner_product(tl, SpechtVector.basis(tau_lambda((1,))))


def test_adjointness(rng):
    for lam in [(1,), (2,), (1, 1)]:
        for _ in range(5):
            rep = adjointness_check(random_vector(lam, rng), random_vector(lam, rng), range(1, 6))
            assert rep.passed, rep.failed()


# -- traces ------------------------------------------------------------------

def test_trivial_representation_trace():
    for word in [(), (1,), (1, 2), (3, 1, 2)]:
        res = gamma_trunc((), t_sigma(word), 7)
        assert res.value.terms() == {0: 1}
        assert res.value.error_order == 8
        assert res.exact_part == ONE


def test_telescoping_trace():
    res = gamma_trunc((1,), HeckeElement.one(), 6)
    assert res.value.terms() == {0: 1, 1: 1}
    assert res.value.error_order == 7


# frozen from oracle_trace (exact rational sums), through t^10
FROZEN_GAMMA_ONE = {
    (2,): {0: 1, 1: 2},
    (1, 1): {0: 1, 1: 1, 2: 2, 5: 1, 6: -1, 7: -1, 8: 3, 9: -1, 10: -4},
    (2, 1): {0: 1, 1: 2, 2: 3, 3: 1, 4: -3, 5: 2, 6: 3, 7: -7, 8: 2, 9: 10, 10: -12},
}


@pytest.mark.parametrize("lam", sorted(FROZEN_GAMMA_ONE))
def test_gamma_one_frozen(lam):
    got = gamma_trunc(lam, HeckeElement.one(), 10).value
    assert got.terms() == FROZEN_GAMMA_ONE[lam]
    assert got.error_order == 11


def test_gamma_trunc_matches_oracle():
    rng = random.Random(7)
    for lam in [(1,), (2,), (1, 1)]:
        for _ in range(3):
            word = [rng.randint(1, 4) for _ in range(rng.randint(1, 3))]
            X = t_sigma(word)
            assert gamma_trunc(lam, X, 6).value.agrees_with(oracle_trace(lam, X, 6))


def test_gamma_theta_examples():
    for lam in [(1,), (2,)]:
        assert gamma_theta(lam, [0, 0, 0], 8).value.agrees_with(gamma_trunc(lam, HeckeElement.one(), 8).value)
    res = gamma_theta((), [1, 2, 1], 9)
    assert res.value.terms() == {1 * 0 + 2 * 1 + 1 * 2: 1}
    via_theta = gamma_theta((1,), [0, 1], 8).value
    via_hecke = gamma_trunc((1,), theta_element(2), 8, extra_cutoff=1).value
    assert via_theta.agrees_with(gamma_theta_operator((1,), [0, 1], 8).value)
    assert via_theta.agrees_with(via_hecke)
    assert via_theta.terms() == {-1: 1, 2: 1}


def test_integrality():
    rep = integrality_check((2, 1), t_sigma([3, 1]), 10)
    assert rep.passed
    assert gamma_trunc((2, 1), HeckeElement.one(), 6).value.min_order == 0
    with pytest.raises(ValueError):
        integrality_check((1,), HeckeElement.generator(1).scale(T**-1), 6)


def test_self_adjointness_examples():
    assert self_adjointness_check((1,), Permutation.from_word([1, 2]), 8).passed
    assert self_adjointness_check((2,), Permutation.from_word([2, 3, 1]), 6).passed
    assert self_adjointness_check((1,), Permutation.from_word([1]), 6).passed


def test_skew_vanishing_examples():
    assert skew_vanishing_check((1,), Permutation.from_word([1]), 8).passed
    assert skew_vanishing_check((2, 1), Permutation.from_word([2]), 6).passed
    assert skew_vanishing_check((1,), Permutation.from_word([1, 2, 1]), 6).passed
    with pytest.raises(ValueError):
        skew_vanishing_check((1,), Permutation.from_word([1, 2]), 6)
    with pytest.raises(ValueError):
        skew_vanishing_check((1,), Permutation.from_word([1, 3]), 6)


def test_trace_result_serialisation():
    res = gamma_trunc((1,), HeckeElement.one(), 4)
    obj = json.loads(json.dumps(res.to_json()))
    assert LaurentTrunc.from_json(obj["series"]).terms() == {0: 1, 1: 1}
    assert res.to_csv().splitlines()[0].startswith("exponent")


# -- product guesses ---------------------------------------------------------

def test_guess_telescoping():
    g = rational_guess(gamma_trunc((1,), HeckeElement.one(), 20).value)
    assert g.numerator_exponents == [2] and g.denominator_exponents == [1]
    assert g.as_ratfunc() == 1 + T


def test_guess_trivial():
    g = rational_guess(LaurentTrunc(0, (1,), 10))
    assert g.numerator_exponents == [] and g.denominator_exponents == []
    assert str(g) == "1"


def test_guess_roundtrip():
    f = one_minus_t_power(3) * one_minus_t_power(4) / (one_minus_t_power(1) * one_minus_t_power(6))
    g = rational_guess(truncate(f, 15))
    assert (g.numerator_exponents, g.denominator_exponents) == ([3, 4], [1, 6])
    assert g.verified_order == 15


def test_guess_failures():
    assert rational_guess(truncate(ONE + T / 2, 8)) is None
    assert rational_guess(truncate(1 + 2 * T, 16)) is None
    assert rational_guess(truncate(ONE / (1 - T) ** 50, 4)) is None
    with pytest.raises(ValueError):
        rational_guess(truncate(2 + T, 4))
    # a high exponent cap accepts an overfit, a low one refuses it
    s = truncate(1 + T + T**7, 8)
    assert rational_guess(s) is not None
    assert rational_guess(s, max_exponent=4) is None


@given(
    st.lists(st.integers(min_value=1, max_value=5), max_size=3),
    st.lists(st.integers(min_value=1, max_value=5), max_size=3),
)
def test_guess_recovers_products(num, den):
    f = ONE
    for a in num:
        f = f * one_minus_t_power(a)
    for b in den:
        f = f / one_minus_t_power(b)
    g = rational_guess(truncate(f, 14))
    assert g is not None
    assert g.as_ratfunc() == f
