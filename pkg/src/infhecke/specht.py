"""The Specht modules S_{lam^(n)} and S_{lam^(infinity)} in the Jucys-Murphy eigenbasis.

Vectors are finite combinations of ``e_tau`` over stable tableaux; since each
``T_i`` only looks at the labels ``i, i+1``, the same code acts on every
finite level ``lam^(n)`` (for ``i < n``) and on the infinite module.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .limits import ResourceCapError, max_module_dim
from .report import Report
from .scalars import ONE, T, ZERO, RatFunc, format_ratfunc, one_minus_t_power, parse_ratfunc
from .tableaux import (
    Move,
    Partition,
    StableSYT,
    apply_si,
    classify_si,
    content,
    extended_shape,
    level_tableaux,
    parse_partition,
    partition,
    removable_children,
    syt_count,
)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

@dataclass
class SpechtVector:
    """``sum_tau terms[tau] * e_tau``; zero coefficients are never stored."""

    lam: Partition
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lam = tuple(self.lam)
        self.terms = {k: v for k, v in self.terms.items() if v}
        for tau in self.terms:
            if tau.lam != self.lam:
                raise ValueError(f"tableau {tau} does not belong to lambda = {self.lam}")

    @classmethod
    def basis(cls, tau: StableSYT, coeff: RatFunc = ONE) -> SpechtVector:
        return cls(tau.lam, {tau: coeff})

    @classmethod
    def zero(cls, lam) -> SpechtVector:
        return cls(tuple(lam), {})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, tau: StableSYT) -> RatFunc:
        return self.terms.get(tau, ZERO)

    def support(self) -> list[StableSYT]:
        return sorted(self.terms, key=StableSYT.reading_word)

    def _combine(self, other: SpechtVector, sign: int) -> SpechtVector:
        if other.lam != self.lam:
            raise ValueError("cannot add vectors of different shapes")
        out = dict(self.terms)
        for tau, c in other.terms.items():
            new = out.get(tau, ZERO) + (c if sign > 0 else -c)
            if new:
                out[tau] = new
            else:
                out.pop(tau, None)
        return _vec(self.lam, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return _vec(self.lam, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> SpechtVector:
        c = RatFunc._coerce(c)
        if not c:
            return SpechtVector.zero(self.lam)
        return _vec(self.lam, {k: v * c for k, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SpechtVector):
            return NotImplemented
        return self.lam == other.lam and self.terms == other.terms

    def to_json(self) -> dict:
        return {
            "lambda": ",".join(map(str, self.lam)),
            "terms": [
                {"tableau": [list(r) for r in tau.rows], "coeff": format_ratfunc(self.terms[tau])}
                for tau in self.support()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> SpechtVector:
        lam = parse_partition(str(obj["lambda"]))
        v = cls.zero(lam)
        for term in obj["terms"]:
            tau = StableSYT.from_rows(lam, term["tableau"])
            v = v + cls.basis(tau, parse_ratfunc(str(term["coeff"])))
        return v

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({format_ratfunc(self.terms[t])})*e{t}" for t in self.support())


def _vec(lam, terms: dict) -> SpechtVector:
    """Build without re-validating; ``terms`` must already be zero-free."""
    v = SpechtVector.__new__(SpechtVector)
    v.lam = lam
    v.terms = terms
    return v


def linear_combination(lam, pairs: Iterable) -> SpechtVector:
    """Sum of ``coeff * e_tau`` over ``(tau, coeff)`` pairs."""
    out: dict = {}
    for tau, c in pairs:
        if not c:
            continue
        new = out.get(tau, ZERO) + c
        if new:
            out[tau] = new
        else:
            out.pop(tau, None)
    return _vec(tuple(lam), out)


# ---------------------------------------------------------------------------
# structure constants of T_i
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cover_up_coefficients(g: int) -> tuple[RatFunc, RatFunc]:
    """``(coefficient of e_{s tau}, coefficient of e_tau)`` when ``i+1`` covers ``i`` with gap ``g``."""
    return ONE, (ONE - T) / one_minus_t_power(g)


@lru_cache(maxsize=None)
def cover_down_coefficients(d: int) -> tuple[RatFunc, RatFunc]:
    """The same for the opposite move, ``d = c(i) - c(i+1) > 0``."""
    den = one_minus_t_power(d)
    swap = T * one_minus_t_power(d - 1) * one_minus_t_power(d + 1) / (den * den)
    diag = -(RatFunc.t_power(d) * (ONE - T) / den)
    return swap, diag


MINUS_T = -T

Rule = Callable[[StableSYT, int], tuple]


@lru_cache(maxsize=500_000)
def t_structure(tau: StableSYT, i: int) -> tuple:
    """``T_i e_tau`` as a tuple of ``(tableau, coefficient)`` pairs."""
    move = classify_si(tau, i)
    if move is Move.SAME_ROW:
        return ((tau, ONE),)
    if move is Move.SAME_COLUMN:
        return ((tau, MINUS_T),)
    gap = content(tau, i + 1) - content(tau, i)
    if move is Move.COVER_UP:
        swap, diag = cover_up_coefficients(gap)
    else:
        swap, diag = cover_down_coefficients(-gap)
    return ((apply_si(tau, i), swap), (tau, diag))


def corrupted_rule(perturbation: RatFunc = RatFunc(1, 2)) -> Rule:
    """A deliberately wrong action (CoverUp diagonal coefficient perturbed) for negative controls."""

    def rule(tau: StableSYT, i: int) -> tuple:
        pairs = t_structure(tau, i)
        if classify_si(tau, i) is Move.COVER_UP:
            (s, a), (u, b) = pairs
            return ((s, a), (u, b + perturbation))
        return pairs

    return rule


def _apply(rule: Rule, i: int, v: SpechtVector) -> SpechtVector:
    out: dict = {}
    get = out.get
    for tau, c in v.terms.items():
        for sigma, k in rule(tau, i):
            new = get(sigma, ZERO) + c * k
            if new:
                out[sigma] = new
            else:
                out.pop(sigma, None)
    return _vec(v.lam, out)


def act_T(i: int, v: SpechtVector, rule: Rule = t_structure) -> SpechtVector:
    """Apply ``T_i`` (four-case explicit action)."""
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return _apply(rule, i, v)


T_INV_SHIFT = T - ONE
T_INVERSE = T.inverse()


def act_tT_inv(i: int, v: SpechtVector, rule: Rule = t_structure) -> SpechtVector:
    """``t T_i^{-1} = T_i + t - 1`` (from the quadratic relation)."""
    return act_T(i, v, rule) + v.scale(T_INV_SHIFT)


def act_T_inv(i: int, v: SpechtVector, rule: Rule = t_structure) -> SpechtVector:
    """``T_i^{-1} = t^{-1}(T_i + t - 1)``."""
    return act_tT_inv(i, v, rule).scale(T_INVERSE)


def theta_eigenvalue(tau: StableSYT, i: int) -> RatFunc:
    return RatFunc.t_power(content(tau, i))


def act_theta(i: int, v: SpechtVector) -> SpechtVector:
    """``theta_i e_tau = t^{c_tau(i)} e_tau``."""
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    return _vec(v.lam, {tau: c * theta_eigenvalue(tau, i) for tau, c in v.terms.items()})


def act_phi(i: int, v: SpechtVector, rule: Rule = t_structure) -> SpechtVector:
    """``phi_i = t T_i^{-1}(theta_i - theta_{i+1}) + (t - 1) theta_{i+1}``."""
    diff = act_theta(i, v) - act_theta(i + 1, v)
    return act_tT_inv(i, diff, rule) + act_theta(i + 1, v).scale(T_INV_SHIFT)


def act_phi_commutator(i: int, v: SpechtVector, rule: Rule = t_structure) -> SpechtVector:
    """The defining form ``(t T_i^{-1}) theta_i - theta_i (t T_i^{-1})``."""
    return act_tT_inv(i, act_theta(i, v), rule) - act_theta(i, act_tT_inv(i, v, rule))


def phi_eigenrule(tau: StableSYT, i: int) -> SpechtVector | None:
    """``(t^{c(i)} - t^{c(i+1)}) e_{s_i tau}`` when ``s_i tau > tau``, else ``None``."""
    if classify_si(tau, i) is not Move.COVER_UP:
        return None
    coeff = theta_eigenvalue(tau, i) - theta_eigenvalue(tau, i + 1)
    return SpechtVector.basis(apply_si(tau, i), coeff)


def apply_word(word: Iterable[int], v: SpechtVector, op: Callable = act_T, **kw) -> SpechtVector:
    """Apply ``op(i_1) op(i_2) ... op(i_r)`` to ``v`` (rightmost letter acts first)."""
    for i in reversed(list(word)):
        v = op(i, v, **kw)
    return v


# ---------------------------------------------------------------------------
# relation harness
# ---------------------------------------------------------------------------

def specht_basis(lam, n: int) -> list[StableSYT]:
    lam = partition(lam)
    dim = syt_count(extended_shape(lam, n))
    if dim > max_module_dim():
        raise ResourceCapError(f"dim S_lam^({n}) = {dim} exceeds the cap {max_module_dim()}")
    return level_tableaux(lam, n)


def verify_finite_relations(lam, n: int, rule: Rule = t_structure) -> Report:
    """Check every defining and derived relation on each basis vector of ``S_{lam^(n)}``.

    All comparisons are exact identities in Q(t).  Passing a different ``rule``
    (e.g. :func:`corrupted_rule`) swaps the action of ``T_i`` used throughout.
    """
    lam = partition(lam)
    basis = specht_basis(lam, n)
    rep = Report(f"relations lambda={lam} n={n}")
    gens = range(1, n)
    labels = range(1, n + 1)

    def T_(i, v):
        return act_T(i, v, rule)

    def tTi(i, v):
        return act_tT_inv(i, v, rule)

    def phi(i, v):
        return act_phi(i, v, rule)

    def check(name, lhs, rhs, tau, what):
        ok = lhs == rhs
        rep.record(name, ok, None if ok else f"{what} on e{tau}")

    # T-word for t^{-(i-1)} theta_i, built column by column: W_{i+1} = T_i^{-1} W_i T_i^{-1}
    # with W_1 = 1; every entry comes from T alone.
    words: dict = {tau: SpechtVector.basis(tau) for tau in basis}
    t_inv_cols: dict = {}

    def t_inv_col(i, tau):
        key = (i, tau)
        if key not in t_inv_cols:
            t_inv_cols[key] = act_T_inv(i, SpechtVector.basis(tau), rule)
        return t_inv_cols[key]

    for i in labels:
        for tau in basis:
            expected = act_theta(i, SpechtVector.basis(tau)).scale(RatFunc.t_power(1 - i))
            check("theta_T_word", words[tau], expected, tau, f"theta_{i}")
        if i == n:
            break
        new = {}
        for tau in basis:
            inner = SpechtVector.zero(lam)
            for sigma, c in t_inv_col(i, tau).terms.items():
                inner = inner + words[sigma].scale(c)
            acc = SpechtVector.zero(lam)
            for sigma, c in inner.terms.items():
                acc = acc + t_inv_col(i, sigma).scale(c)
            new[tau] = acc
        words = new

    for tau in basis:
        e = SpechtVector.basis(tau)
        Te = {i: T_(i, e) for i in gens}
        th = {j: act_theta(j, e) for j in labels}
        ph = {i: phi(i, e) for i in gens}

        for i in gens:
            # (T_i - 1)(T_i + t) = 0
            x = Te[i] + e.scale(T)
            check("quadratic", T_(i, x) - x, SpechtVector.zero(lam), tau, f"i={i}")
            # recursion theta_{i+1} = t T_i^{-1} theta_i T_i^{-1}
            lhs = act_theta(i + 1, e)
            rhs = tTi(i, act_theta(i, act_T_inv(i, e, rule)))
            check("theta_recursion", lhs, rhs, tau, f"i={i}")
            # phi_i in commutator form, and the eigenvector rule
            check("phi_definition", ph[i], act_phi_commutator(i, e, rule), tau, f"i={i}")
            rule_v = phi_eigenrule(tau, i)
            if rule_v is not None:
                check("phi_eigenrule", ph[i], rule_v, tau, f"i={i}")
            # phi_i^2 = (t theta_i - theta_{i+1})(t theta_{i+1} - theta_i)
            a, b = theta_eigenvalue(tau, i), theta_eigenvalue(tau, i + 1)
            check("phi_square", phi(i, ph[i]), e.scale((T * a - b) * (T * b - a)), tau, f"i={i}")
            # phi_i theta_j = theta_{s_i(j)} phi_i
            for j in labels:
                sj = i + 1 if j == i else i if j == i + 1 else j
                check("phi_theta", phi(i, th[j]), act_theta(sj, ph[i]), tau, f"i={i}, j={j}")
            # T_i theta_j = theta_j T_i for j not in {i, i+1}
            for j in labels:
                if j not in (i, i + 1):
                    check("T_theta_commute", T_(i, th[j]), act_theta(j, Te[i]), tau, f"i={i}, j={j}")
            if i + 1 in gens:
                lhs = T_(i, T_(i + 1, Te[i]))
                rhs = T_(i + 1, T_(i, Te[i + 1]))
                check("braid", lhs, rhs, tau, f"i={i}")
                lhs = phi(i, phi(i + 1, ph[i]))
                rhs = phi(i + 1, phi(i, ph[i + 1]))
                check("phi_braid", lhs, rhs, tau, f"i={i}")
            for j in gens:
                if j > i + 1:
                    check("commute", T_(i, Te[j]), T_(j, Te[i]), tau, f"i={i}, j={j}")
                    check("phi_commute", phi(i, ph[j]), phi(j, ph[i]), tau, f"i={i}, j={j}")
        for i, j in itertools.combinations(labels, 2):
            check("theta_commute", act_theta(i, th[j]), act_theta(j, th[i]), tau, f"i={i}, j={j}")

    for name in ("quadratic", "braid", "commute", "theta_T_word", "theta_commute",
                 "T_theta_commute", "phi_definition", "phi_braid", "phi_commute",
                 "phi_theta", "phi_square"):
        rep.checks.setdefault(name, True)  # vacuous when n is too small for the relation
    rep.details["dimension"] = str(len(basis))
    return rep


def branch_dimension_check(lam, n: int) -> Report:
    """``dim S_{lam^(n)}`` equals the sum of ``dim S_mu`` over ``mu`` one box smaller."""
    lam = partition(lam)
    if n < 1:
        raise ValueError("need n >= 1")
    shape = extended_shape(lam, n)
    dim = syt_count(shape)
    parts = {mu: syt_count(mu) for mu in removable_children(shape)}
    total = sum(parts.values())
    rep = Report(f"branching lambda={lam} n={n}")
    rep.record("branching", dim == total, f"{dim} != {total}")
    rep.details["dimension"] = str(dim)
    rep.details["children"] = ", ".join(f"{mu}:{d}" for mu, d in parts.items())
    return rep
