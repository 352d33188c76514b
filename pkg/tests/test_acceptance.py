"""Acceptance criteria, one test each.

Every criterion records a ``criterion N: PASS|FAIL|REPORT`` line; the lines are
printed by the terminal-summary hook in conftest.py (and directly with ``-s``).
Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import random
import time

import pytest

from infhecke.hecke import HeckeElement, Permutation, act_on_specht, coeff_valuation, epsilon_fin, t_sigma, theta_element
from infhecke.scalars import ONE, RatFunc, Poly, T, ZERO, truncate
from infhecke.specht import SpechtVector, act_T, verify_finite_relations
from infhecke.stable import alpha_coefficient, count_C, enumerate_C, epsilon_fin_oracle, epsilon_level, stability_defect
from infhecke.tableaux import enumerate_by_inv, inv, level_tableaux, n_lambda, size, syt_count, tau_lambda
from infhecke.trace import (
    a_weight,
    adjointness_check,
    gamma_theta,
    gamma_theta_operator,
    gamma_trunc,
    inner_product,
    integrality_check,
    rational_guess,
    self_adjointness_check,
)
from math import comb

from conftest import random_vector

RESULTS: list = []

UP_TO_4 = [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
UP_TO_3 = UP_TO_4[:7]
UP_TO_2 = UP_TO_4[:4]


def record(number: int, ok, detail: str = "", status: str | None = None) -> None:
    status = status or ("PASS" if ok else "FAIL")
    line = f"criterion {number}: {status}" + (f"  {detail}" if detail else "")
    RESULTS.append(line)
    print(line)


def random_sigma(rng, max_len=4, n=5):
    return Permutation.from_word([rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len))])


# ---------------------------------------------------------------------------

def test_criterion_01_relations():
    start = time.perf_counter()
    failures = []
    for lam in UP_TO_4:
        for n in range(n_lambda(lam), n_lambda(lam) + 3):
            rep = verify_finite_relations(lam, n)
            if not rep.passed:
                failures.append(f"{lam} n={n}: {rep.failed()}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    record(1, ok, f"{len(UP_TO_4) * 3} modules, {elapsed:.1f}s {failures[:3] if failures else ''}")
    assert ok


def test_criterion_02_idempotents():
    failures = 0
    G = HeckeElement.generator
    for n in range(0, 6):
        for k in range(n + 1):
            e = epsilon_fin(k, n)
            for l in range(n + 1):
                failures += e * epsilon_fin(l, n) != epsilon_fin(min(k, l), n)
            for i in range(1, n):
                if i <= k - 1:
                    failures += G(i) * e != e * G(i)
                if i >= k + 1:
                    failures += not (G(i) * e == e and e * G(i) == e)
    checked = 0
    for lam in UP_TO_3:
        for n in range(max(n_lambda(lam), 0), 6):
            for tau in level_tableaux(lam, n):
                v = SpechtVector.basis(tau)
                images = {k: act_on_specht(epsilon_fin(k, n), v) for k in range(n + 1)}
                for k in range(n + 1):
                    ek = images[k]
                    if k >= size(lam):
                        failures += ek != epsilon_level(k, tau, n)
                    for l in range(n + 1):
                        failures += act_on_specht(epsilon_fin(k, n), images[l]) != images[min(k, l)]
                    for i in range(1, n):
                        if i <= k - 1:
                            failures += act_T(i, ek) != act_on_specht(epsilon_fin(k, n), act_T(i, v))
                        if i >= k + 1:
                            failures += act_T(i, ek) != ek
                    checked += 1
    record(2, failures == 0, f"{checked} operator cases, {failures} failures")
    assert failures == 0


def test_criterion_03_dimensions():
    breakdown = count_C((2, 1), 8)
    ok = breakdown == {(5, 2, 1): 64, (6, 2): 20, (6, 1, 1): 21, (7, 1): 7} and len(enumerate_C((2, 1), 8)) == 112
    bad = []
    for lam in UP_TO_3:
        for r in range(n_lambda(lam), n_lambda(lam) + 5):
            if len(enumerate_C(lam, r)) != comb(r, size(lam)) * syt_count(lam):
                bad.append((lam, r))
    ok = ok and not bad
    record(3, ok, f"|C_(2,1),8| = {sum(breakdown.values())} {dict(breakdown)}; mismatches {bad}")
    assert ok


def test_criterion_04_valuations():
    bad_alpha = bad_a = count = 0
    for lam in UP_TO_3:
        for tau in enumerate_by_inv(lam, 5):
            count += 1
            bad_a += a_weight(tau).valuation() != inv(tau)
            for r in range(n_lambda(lam), n_lambda(lam) + 3):
                bad_alpha += alpha_coefficient(r, tau)[0].valuation() < 0
    ok = bad_a == 0 and bad_alpha == 0
    record(4, ok, f"{count} tableaux; alpha violations {bad_alpha}, a-weight violations {bad_a}")
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="eps_r^(r+m)(e_tau) depends on m once the strip leaves row 1 (e.g. lam=(1), r=2, tau=[1,2/3]); "
    "the limit does not exist. Analysis in README and the decisions ledger.",
)
def test_criterion_05_stability():
    total = bad = 0
    example = None
    for lam in [(), (1,), (2,), (1, 1), (2, 1)]:
        taus = [t for t in level_tableaux(lam, 6)] if n_lambda(lam) <= 6 else []
        for tau in taus:
            for r in range(n_lambda(lam), n_lambda(lam) + 3):
                total += 1
                if not stability_defect(r, tau).is_zero():
                    bad += 1
                    example = example or (lam, tau.rows, r)
    record(5, bad == 0, f"{total - bad}/{total} agree; first disagreement {example}")
    assert bad == 0


def test_criterion_06_inner_product():
    rng = random.Random(6)
    failures = []
    pairs = 0
    for lam in UP_TO_3:
        basis = enumerate_by_inv(lam, 3)
        for x in basis:
            for y in basis:
                if x != y and inner_product(SpechtVector.basis(x), SpechtVector.basis(y)) != ZERO:
                    failures.append(("orthogonality", lam))
        e = SpechtVector.basis(tau_lambda(lam))
        if inner_product(e, e) != ONE:
            failures.append(("normalisation", lam))
        gens = range(1, max(t.rank for t in basis) + 2)
        for _ in range(100):
            rep = adjointness_check(random_vector(lam, rng), random_vector(lam, rng), gens)
            pairs += 1
            if not rep.passed:
                failures.append((lam, rep.failed()))
    record(6, not failures, f"{pairs} random pairs; failures {failures[:3]}")
    assert not failures


def test_criterion_07_telescoping():
    start = time.perf_counter()
    series = gamma_trunc((1,), HeckeElement.one(), 20).value
    guess = rational_guess(series)
    elapsed = time.perf_counter() - start
    ok = (
        series.agrees_with(truncate(1 + T, 20))
        and series.error_order == 21
        and guess is not None
        and (guess.numerator_exponents, guess.denominator_exponents) == ([2], [1])
        and elapsed < 60
    )
    record(7, ok, f"{series}; guess {guess}; {elapsed:.2f}s")
    assert ok


def test_criterion_08_trivial_trace():
    rng = random.Random(8)
    bad = []
    for _ in range(20):
        sigma = random_sigma(rng, max_len=6, n=7)
        res = gamma_trunc((), HeckeElement.basis(sigma), 10)
        if not (res.exact_part == ONE and res.value.terms() == {0: 1}):
            bad.append(sigma)
    record(8, not bad, f"20 permutations, failures {bad}")
    assert not bad


def test_criterion_09_self_adjointness():
    rng = random.Random(9)
    bad = []
    for _ in range(20):
        sigma = random_sigma(rng, max_len=4)
        for lam in UP_TO_2:
            if not self_adjointness_check(lam, sigma, 10).passed:
                bad.append((lam, sigma))
    record(9, not bad, f"20 permutations x {len(UP_TO_2)} shapes, failures {bad}")
    assert not bad


def test_criterion_10_integrality():
    rng = random.Random(10)
    bad = []
    for _ in range(20):
        X = HeckeElement({})
        for _ in range(rng.randint(1, 3)):
            c = RatFunc(Poly([rng.randint(-3, 3) for _ in range(3)]), Poly([1, rng.randint(-2, 2)]))
            c = c * T ** rng.randint(0, 2)
            X = X + HeckeElement.basis(random_sigma(rng, max_len=4), c)
        assert coeff_valuation(X) >= 0
        for lam in UP_TO_2:
            rep = integrality_check(lam, X, 10)
            if not rep.passed:
                bad.append((lam, str(X)))
    record(10, not bad, f"20 elements x {len(UP_TO_2)} shapes, failures {bad[:2]}")
    assert not bad


def exponent_vectors(length=4, total=3):
    def rec(prefix):
        if len(prefix) == length:
            if sum(prefix) <= total:
                yield list(prefix)
            return
        for a in range(0, total - sum(prefix) + 1):
            yield from rec(prefix + [a])

    return list(rec([]))


def test_criterion_11_theta_oracle():
    bad = []
    vectors = exponent_vectors()
    for lam in UP_TO_2:
        for exps in vectors:
            closed = gamma_theta(lam, exps, 8).value
            if not closed.agrees_with(gamma_theta_operator(lam, exps, 8).value):
                bad.append((lam, exps, "operator"))
            if len(exps) > 2 and any(exps[2:]):
                continue
            X = HeckeElement.one()
            for i, a in enumerate(exps, start=1):
                for _ in range(a):
                    X = X * theta_element(i)
            if not closed.agrees_with(gamma_trunc(lam, X, 8).value):
                bad.append((lam, exps, "hecke"))
    record(11, not bad, f"{len(vectors)} exponent vectors x {len(UP_TO_2)} shapes, failures {bad[:3]}")
    assert not bad


def test_criterion_12_conjecture_report():
    lines = []
    for lam in UP_TO_3:
        series = gamma_trunc(lam, HeckeElement.one(), 16).value
        guess = rational_guess(series)
        if guess is not None:
            assert guess.verified_order == 16
            assert truncate(guess.as_ratfunc(), 16).agrees_with(series)
        lines.append(f"{lam}: {guess if guess is not None else 'none'}")
    record(12, True, "; ".join(lines), status="REPORT")
