"""The invariant inner product on S_{lam^(infinity)} and certified truncations of the
regularized traces ``Gamma_lam(X) = sum_tau (X e~_tau, e~_tau)``.

Every term of the trace series has valuation at least ``inv(tau) + v(X)`` where
``v(X)`` bounds the operator norm from below in valuation terms.  Summing over
``inv(tau) <= K - min(0, v(X))`` therefore certifies all coefficients through
``t^K``.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Literal

from .hecke import HeckeElement, Permutation, act_on_specht, coeff_valuation, reduced_word
from .report import Report
from .scalars import ONE, T, ZERO, LaurentTrunc, RatFunc, format_ratfunc, one_minus_t_power, truncate
from .specht import SpechtVector, act_phi, act_theta
from .tableaux import (
    Move,
    StableSYT,
    apply_si,
    classify_si,
    content,
    enumerate_by_inv,
    inv,
    inversion_pairs,
    partition,
    tau_lambda,
)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def _gaps(tau: StableSYT) -> list[int]:
    return [g for _, _, g in inversion_pairs(tau)]


def a_weight(tau: StableSYT) -> RatFunc:
    """``(e_tau, e_tau) = t^inv prod (1 - t^{g-1})(1 - t^{g+1}) / (1 - t^g)^2`` over inversion gaps."""
    out = RatFunc.t_power(inv(tau))
    for g in _gaps(tau):
        out = out * _pair_factor(g)
    return out


@lru_cache(maxsize=None)
def _pair_factor(g: int) -> RatFunc:
    den = one_minus_t_power(g)
    return one_minus_t_power(g - 1) * one_minus_t_power(g + 1) / (den * den)


def _cover_factor(g: int) -> RatFunc:
    """``a(s_i tau) / a(tau)`` for a cover with content gap ``g``."""
    return T * _pair_factor(g)


def a_weight_recursive(tau: StableSYT, path: Literal["first", "last"] = "first") -> RatFunc:
    """The same weight from the cover recursion, walking down to ``tau_lambda``."""
    out = ONE
    cur = tau
    while True:
        downs = [i for i in range(1, cur.rank) if classify_si(cur, i) is Move.COVER_DOWN]
        if not downs:
            break
        i = downs[0] if path == "first" else downs[-1]
        out = out * _cover_factor(content(cur, i) - content(cur, i + 1))
        cur = apply_si(cur, i)
    if cur != tau_lambda(tau.lam):
        raise AssertionError(f"descent from {tau} stopped at {cur}")
    return out


def rescale_factor(tau: StableSYT) -> RatFunc:
    """``e~_tau / e_tau = prod (1 - t^g) / (1 - t^{g+1})`` over inversion gaps."""
    out = ONE
    for g in _gaps(tau):
        out = out * one_minus_t_power(g) / one_minus_t_power(g + 1)
    return out


def gamma_weight(tau: StableSYT) -> RatFunc:
    """``(e~_tau, e~_tau) = t^inv prod (1 - t^{g-1}) / (1 - t^{g+1})``."""
    out = RatFunc.t_power(inv(tau))
    for g in _gaps(tau):
        out = out * one_minus_t_power(g - 1) / one_minus_t_power(g + 1)
    return out


@lru_cache(maxsize=100_000)
def _unit_series(gaps: tuple, length: int) -> tuple:
    """Integer coefficients of ``prod (1 - t^{g-1}) / (1 - t^{g+1})`` below ``t^length``."""
    c = [0] * length
    if length:
        c[0] = 1
    for g in gaps:
        a, b = g - 1, g + 1
        if a < length:
            for k in range(length - 1, a - 1, -1):
                c[k] -= c[k - a]
        for k in range(b, length):
            c[k] += c[k - b]
    return tuple(c)


def gamma_weight_series(tau: StableSYT, error_order: int) -> LaurentTrunc:
    """``gamma_weight(tau)`` expanded up to (not including) ``t^error_order``."""
    k = inv(tau)
    length = max(0, error_order - k)
    coeffs = _unit_series(tuple(sorted(_gaps(tau))), length)
    return LaurentTrunc(min(k, error_order), coeffs, error_order)


def inner_product(v: SpechtVector, w: SpechtVector) -> RatFunc:
    """``(v, w) = sum_tau v_tau w_tau a(tau)``."""
    if v.lam != w.lam:
        raise ValueError(f"vectors live in different modules: {v.lam} vs {w.lam}")
    out = ZERO
    small, big = (v, w) if len(v.terms) <= len(w.terms) else (w, v)
    for tau, c in small.terms.items():
        d = big.terms.get(tau)
        if d is not None:
            out = out + c * d * a_weight(tau)
    return out


def rescaled_basis(tau: StableSYT) -> SpechtVector:
    return SpechtVector.basis(tau, rescale_factor(tau))


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

@dataclass
class TraceResult:
    value: LaurentTrunc
    tableaux_summed: int
    inv_cutoff: int
    exact_part: RatFunc | None = None

    def to_json(self) -> dict:
        return {
            "series": self.value.to_json(),
            "text": str(self.value),
            "inv_cutoff": self.inv_cutoff,
            "tableaux_summed": self.tableaux_summed,
            "exact": None if self.exact_part is None else format_ratfunc(self.exact_part),
        }

    def to_csv(self) -> str:
        return series_csv(self.value)


def series_csv(series: LaurentTrunc) -> str:
    """``exponent,coefficient`` rows for every certified exponent."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["exponent", "coefficient"])
    for k in range(min(series.min_order, series.error_order), series.error_order):
        c = series.coeff(k)
        writer.writerow([k, str(c)])
    return buf.getvalue()


def gamma_operator(
    lam,
    op: Callable[[SpechtVector], SpechtVector],
    K: int,
    norm_valuation: float,
    extra_cutoff: int = 0,
) -> TraceResult:
    """``sum_tau (op e~_tau, e~_tau)`` certified through ``t^K``.

    ``norm_valuation`` must be a lower bound for the valuation of every matrix
    coefficient of ``op`` in the ``e_tau`` basis (``inf`` for the zero operator).
    """
    lam = partition(lam)
    if K < 0:
        raise ValueError("K must be >= 0")
    if norm_valuation == float("inf"):
        return TraceResult(LaurentTrunc.zero(K + 1), 0, -1, ZERO)
    nv = int(norm_valuation)
    cutoff = K - min(0, nv) + extra_cutoff
    tableaux = enumerate_by_inv(lam, cutoff)
    total = LaurentTrunc.zero(K + 1)
    exact = ZERO if not lam else None
    for tau in tableaux:
        diag = op(SpechtVector.basis(tau)).coeff(tau)
        if not diag:
            continue
        if exact is not None:
            exact = exact + diag * gamma_weight(tau)
        vd = int(diag.valuation())
        k = inv(tau)
        if vd + k > K:
            continue
        total = total + truncate(diag, K - k) * gamma_weight_series(tau, K + 1 - vd)
    return TraceResult(total.truncated(K + 1), len(tableaux), cutoff, exact)


def gamma_trunc(lam, X: HeckeElement, K: int, extra_cutoff: int = 0) -> TraceResult:
    """``Gamma_lam(X)`` through ``t^K``; ``||T_sigma|| <= 1`` gives the norm bound."""
    nv = coeff_valuation(X)
    return gamma_operator(lam, lambda v: act_on_specht(X, v), K, nv, extra_cutoff)


def theta_monomial_operator(exponents: Iterable[int]) -> Callable[[SpechtVector], SpechtVector]:
    exps = list(exponents)

    def op(v: SpechtVector) -> SpechtVector:
        for i, a in enumerate(exps, start=1):
            for _ in range(a):
                v = act_theta(i, v)
        return v

    return op


def _check_exponents(exponents) -> list[int]:
    exps = [int(a) for a in exponents]
    if any(a < 0 for a in exps):
        raise ValueError(f"exponents must be >= 0: {exps}")
    return exps


def gamma_theta(lam, exponents: Iterable[int], K: int) -> TraceResult:
    """``Gamma_lam(theta_1^{a_1} ... theta_r^{a_r})`` from the closed-form weights.

    Contents in ``lam^(infinity)`` are at least ``-len(lam)``, so a term has
    valuation at least ``inv(tau) - len(lam) * sum(a)``; the cutoff is raised by
    that amount.
    """
    lam = partition(lam)
    exps = _check_exponents(exponents)
    shift = len(lam) * sum(exps)
    cutoff = K + shift
    tableaux = enumerate_by_inv(lam, cutoff)
    total = LaurentTrunc.zero(K + 1)
    exact = ZERO if not lam else None
    for tau in tableaux:
        e = sum(a * content(tau, i) for i, a in enumerate(exps, start=1))
        if exact is not None:
            exact = exact + RatFunc.t_power(e) * gamma_weight(tau)
        if e + inv(tau) > K:
            continue
        total = total + gamma_weight_series(tau, K + 1 - e).shifted(e)
    return TraceResult(total.truncated(K + 1), len(tableaux), cutoff, exact)


def gamma_theta_operator(lam, exponents: Iterable[int], K: int) -> TraceResult:
    """The same trace through the operator route (``act_theta`` on each basis vector)."""
    lam = partition(lam)
    exps = _check_exponents(exponents)
    return gamma_operator(lam, theta_monomial_operator(exps), K, -len(lam) * sum(exps))


def phi_word_operator(word: Iterable[int]) -> Callable[[SpechtVector], SpechtVector]:
    """``phi_{i_1} ... phi_{i_r}`` (rightmost acts first)."""
    letters = list(word)

    def op(v: SpechtVector) -> SpechtVector:
        for i in reversed(letters):
            v = act_phi(i, v)
        return v

    return op


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def integrality_check(lam, X: HeckeElement, K: int) -> Report:
    """``Gamma_lam(X)`` has no negative powers of ``t`` when ``X`` has integral coefficients."""
    if coeff_valuation(X) < 0:
        raise ValueError("integrality needs every coefficient of X to have valuation >= 0")
    res = gamma_trunc(lam, X, K)
    rep = Report(f"integrality lambda={partition(lam)} K={K}")
    rep.record("min_order_nonnegative", res.value.min_order >= 0, f"min_order {res.value.min_order}")
    rep.details["series"] = str(res.value)
    return rep


def self_adjointness_check(lam, sigma: Permutation, K: int) -> Report:
    """``Gamma_lam(T_sigma) = Gamma_lam(T_{sigma^{-1}})`` through ``t^K``."""
    a = gamma_trunc(lam, HeckeElement.basis(sigma), K).value
    b = gamma_trunc(lam, HeckeElement.basis(sigma.inverse()), K).value
    rep = Report(f"self-adjointness lambda={partition(lam)} sigma={sigma} K={K}")
    rep.record("iota_invariant", a == b, f"{a} != {b}")
    rep.details["series"] = str(a)
    return rep


def skew_vanishing_check(lam, sigma: Permutation, K: int) -> Report:
    """``Gamma_lam(phi_sigma) = 0`` through ``t^K`` for an odd-length involution ``sigma``."""
    lam = partition(lam)
    if sigma * sigma != Permutation.identity():
        raise ValueError(f"{sigma} is not an involution")
    if sigma.length() % 2 == 0:
        raise ValueError(f"{sigma} has even length {sigma.length()}")
    word = reduced_word(sigma)
    # each phi_i has matrix coefficients of valuation >= min content >= -len(lam)
    res = gamma_operator(lam, phi_word_operator(word), K, -len(lam) * len(word))
    rep = Report(f"skew vanishing lambda={lam} sigma={sigma} K={K}")
    rep.record("vanishes", res.value.is_zero(), str(res.value))
    rep.details["series"] = str(res.value)
    return rep


def adjointness_check(v: SpechtVector, w: SpechtVector, generators: Iterable[int]) -> Report:
    """``T_i`` and ``theta_i`` self-adjoint, ``phi_i`` skew-adjoint, on the pair ``(v, w)``."""
    from .specht import act_T

    rep = Report("adjointness")
    for i in generators:
        rep.record("T_self_adjoint", inner_product(act_T(i, v), w) == inner_product(v, act_T(i, w)), f"i={i}")
        rep.record(
            "theta_self_adjoint",
            inner_product(act_theta(i, v), w) == inner_product(v, act_theta(i, w)),
            f"i={i}",
        )
        rep.record(
            "phi_skew_adjoint",
            inner_product(act_phi(i, v), w) == -inner_product(v, act_phi(i, w)),
            f"i={i}",
        )
    return rep


# ---------------------------------------------------------------------------
# product guesses
# ---------------------------------------------------------------------------

@dataclass
class ProductGuess:
    """``prod (1 - t^a) / prod (1 - t^b)`` agreeing with a series through ``t^verified_order``."""

    numerator_exponents: list = field(default_factory=list)
    denominator_exponents: list = field(default_factory=list)
    verified_order: int = 0

    def as_ratfunc(self) -> RatFunc:
        out = ONE
        for a in self.numerator_exponents:
            out = out * one_minus_t_power(a)
        for b in self.denominator_exponents:
            out = out / one_minus_t_power(b)
        return out

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator_exponents),
            "denominator": list(self.denominator_exponents),
            "verified_order": self.verified_order,
            "rational": format_ratfunc(self.as_ratfunc()),
        }

    def __str__(self):
        num = "".join(f"(1-t^{a})" for a in self.numerator_exponents) or "1"
        if not self.denominator_exponents:
            return num
        return num + "/" + "".join(f"(1-t^{b})" for b in self.denominator_exponents)


MAX_FACTORS = 40


def rational_guess(
    series: LaurentTrunc, max_factors: int = MAX_FACTORS, max_exponent: int | None = None
) -> ProductGuess | None:
    """Peel ``(1 - t^e)^{+-1}`` factors off the lowest discrepancy until the series is exhausted.

    Returns ``None`` when a coefficient is not an integer, the factor count
    exceeds ``max_factors``, or a factor with ``e > max_exponent`` is needed
    (default: the certified order, so any guess is accepted). A smaller
    ``max_exponent`` leaves the top coefficients as genuine confirmation.
    """
    if series.min_order != 0 or series.coeff(0) != 1:
        raise ValueError("rational_guess needs a series starting 1 + O(t)")
    N = series.error_order - 1
    cap = N if max_exponent is None else min(N, max_exponent)
    resid = [series.coeff(k) for k in range(N + 1)]
    num: Counter = Counter()
    den: Counter = Counter()
    used = 0
    for e in range(1, N + 1):
        c = resid[e]
        if c == 0:
            continue
        if Fraction(c).denominator != 1 or e > cap:
            return None
        c = int(c)
        used += abs(c)
        if used > max_factors:
            return None
        (den if c > 0 else num)[e] += abs(c)
        # resid *= (1 - t^e)^c
        for _ in range(abs(c)):
            if c > 0:
                for k in range(N, e - 1, -1):
                    resid[k] -= resid[k - e]
            else:
                for k in range(e, N + 1):
                    resid[k] += resid[k - e]
    assert all(x == 0 for x in resid[1:])
    return ProductGuess(sorted(num.elements()), sorted(den.elements()), N)
