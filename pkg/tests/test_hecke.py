import itertools
import random

import pytest
from hypothesis import given, strategies as st

from infhecke.hecke import (
    HeckeElement,
    Permutation,
    act_on_specht,
    coeff_valuation,
    epsilon_fin,
    hecke_mul,
    iota,
    parse_element,
    reduced_word,
    t_sigma,
    theta_element,
)
from infhecke.limits import ResourceCapError
from infhecke.scalars import ONE, T, RatFunc
from infhecke.specht import SpechtVector, act_T, act_theta
from infhecke.tableaux import StableSYT, enumerate_by_inv, level_tableaux, n_lambda

from conftest import random_ratfunc, random_vector

G = HeckeElement.generator


def perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def random_element(rng, n=4, terms=3):
    out = HeckeElement({})
    for _ in range(terms):
        sigma = Permutation.from_word([rng.randint(1, n - 1) for _ in range(rng.randint(0, 4))])
        out = out + HeckeElement.basis(sigma, random_ratfunc(rng))
    return out


def test_reduced_word_examples():
    assert reduced_word(Permutation.identity()) == ()
    assert reduced_word(Permutation((1, 3, 2))) == (2,)
    w = reduced_word(Permutation((3, 2, 1)))
    assert len(w) == 3 and Permutation.from_word(w) == Permutation((3, 2, 1))


def test_reduced_words_are_reduced():
    for sigma in perms(5):
        w = reduced_word(sigma)
        assert len(w) == sigma.length()
        assert Permutation.from_word(w) == sigma


def test_permutation_conventions():
    s1, s2 = Permutation.from_word([1]), Permutation.from_word([2])
    assert s1 * s2 == Permutation.from_word([1, 2])
    sigma = Permutation((2, 3, 1))
    assert sigma.times_s(1) == sigma * s1
    assert sigma.s_times(1) == s1 * sigma
    assert sigma * sigma.inverse() == Permutation.identity()


def test_multiplication_examples():
    assert G(1) * G(1) == G(1).scale(1 - T) + HeckeElement.one().scale(T)
    assert t_sigma([]) == HeckeElement.one()
    assert t_sigma([1, 2]) == HeckeElement.basis(Permutation.from_word([1, 2]))
    assert t_sigma([1, 1]) == G(1).scale(1 - T) + HeckeElement.one().scale(T)


def test_braid_and_commutation():
    assert G(1) * G(2) * G(1) == G(2) * G(1) * G(2)
    assert G(1) * G(3) == G(3) * G(1)
    assert G(2) * HeckeElement.generator_inverse(2) == HeckeElement.one()


def test_associativity(rng):
    for _ in range(10):
        a, b, c = (random_element(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert hecke_mul(a, b) == a * b


def test_iota_examples(rng):
    assert iota(G(1) * G(2)) == G(2) * G(1)
    assert iota(G(3)) == G(3)
    for _ in range(10):
        x, y = random_element(rng), random_element(rng)
        assert iota(iota(x)) == x
        assert iota(x * y) == iota(y) * iota(x)


def test_coeff_valuation_examples():
    assert coeff_valuation(G(1) + G(2).scale(T**2)) == 0
    assert coeff_valuation(HeckeElement.one().scale(T**3)) == 3
    assert coeff_valuation(epsilon_fin(0, 2)) == 0


def test_epsilon_examples():
    assert epsilon_fin(0, 2) == (HeckeElement.one().scale(T) + G(1)).scale(1 / (1 + T))
    assert epsilon_fin(3, 3) == HeckeElement.one()
    assert epsilon_fin(1, 3) == (HeckeElement.one().scale(T) + G(2)).scale(1 / (1 + T))


def test_epsilon_cap(monkeypatch):
    monkeypatch.setenv("INFHECKE_MAX_IDEMPOTENT_N", "4")
    with pytest.raises(ResourceCapError):
        epsilon_fin(0, 5)


@pytest.mark.parametrize("n", range(0, 5))
def test_idempotent_laws(n):
    for k in range(n + 1):
        e = epsilon_fin(k, n)
        for l in range(n + 1):
            assert e * epsilon_fin(l, n) == epsilon_fin(min(k, l), n)
        for i in range(1, n):
            if i <= k - 1:
                assert G(i) * e == e * G(i)
            if i >= k + 1:
                assert G(i) * e == e and e * G(i) == e


def test_theta_element():
    assert theta_element(1) == HeckeElement.one()
    assert coeff_valuation(theta_element(3)) == -2
    # theta_{i+1} = t T_i^{-1} theta_i T_i^{-1}
    for i in range(1, 4):
        tinv = HeckeElement.generator_inverse(i)
        assert theta_element(i + 1) == (tinv * theta_element(i) * tinv).scale(T)
    assert theta_element(2) * theta_element(3) == theta_element(3) * theta_element(2)


def test_theta_element_acts_diagonally():
    for tau in enumerate_by_inv((2, 1), 2):
        v = SpechtVector.basis(tau)
        for i in range(1, 6):
            assert act_on_specht(theta_element(i), v) == act_theta(i, v)


def test_action_examples(rng):
    v = random_vector((2, 1), rng)
    assert act_on_specht(HeckeElement.one(), v) == v
    row = StableSYT.from_rows((1,), [[1, 2, 3], [4]])
    assert act_on_specht(epsilon_fin(0, 2), SpechtVector.basis(row)) == SpechtVector.basis(row)
    braid = G(1) * G(2) * G(1) - G(2) * G(1) * G(2)
    assert braid.is_zero()
    assert act_on_specht(t_sigma([1, 2, 1]), v) == act_on_specht(t_sigma([2, 1, 2]), v)


def test_action_is_a_module_map(rng):
    for _ in range(5):
        x, y = random_element(rng), random_element(rng)
        v = random_vector((1, 1), rng)
        assert act_on_specht(x * y, v) == act_on_specht(x, act_on_specht(y, v))


def test_parse_element():
    assert parse_element("1") == HeckeElement.one()
    assert parse_element("T1 T2") == G(1) * G(2)
    x = parse_element("(t^2) T1 + (1-t) T2 T3 + 1")
    assert x == G(1).scale(T**2) + (G(2) * G(3)).scale(1 - T) + HeckeElement.one()
    with pytest.raises(ValueError):
        parse_element("T0")
    with pytest.raises(ValueError):
        parse_element("Q1")


def test_json_roundtrip(rng):
    x = random_element(rng)
    assert HeckeElement.from_json(x.to_json()) == x


@given(st.lists(st.integers(min_value=1, max_value=4), max_size=6))
def test_t_sigma_of_reduced_word(word):
    sigma = Permutation.from_word(word)
    assert t_sigma(reduced_word(sigma)) == HeckeElement.basis(sigma)
