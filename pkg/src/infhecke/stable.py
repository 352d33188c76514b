"""Partially-trivial idempotents acting on S_{lam^(infinity)}, the strip index set C_{lam,r}
and the partial-invariant vectors ``v_{mu,beta}``.

``eps_r^(n)`` symmetrises the labels ``r+1..n``.  On a basis vector ``e_tau``
its image is a multiple of one trivial vector determined by where the labels
``<= r`` sit.  Both the multiple (``alpha``) and the trivial vector are read off
from cover paths, so no ``(n-r)!``-term sum is ever expanded; the expanded sum
is kept as an oracle (:func:`epsilon_fin_oracle`).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Literal

from .hecke import act_on_specht, epsilon_fin
from .report import Report
from .scalars import ONE, T, ZERO, RatFunc, one_minus_t_power
from .specht import SpechtVector, linear_combination
from .tableaux import (
    FiniteSYT,
    Move,
    Partition,
    StableSYT,
    apply_si,
    classify_si,
    content,
    enumerate_syt,
    extended_shape,
    n_lambda,
    partition,
    size,
    skew_syt_count,
    syt_count,
)


@dataclass(frozen=True)
class StripPair:
    """A horizontal strip ``mu`` on the rim of ``lam^(r+lam_1)`` and a filling ``beta`` of the rest."""

    strip: tuple  # sorted boxes (row, col)
    beta: FiniteSYT

    @property
    def complement(self) -> Partition:
        return self.beta.shape

    def to_json(self) -> dict:
        return {"strip": [list(b) for b in self.strip], "beta": self.beta.to_json()}


def horizontal_strip_complements(shape: Partition, k: int) -> list[Partition]:
    """Partitions ``nu`` with ``shape / nu`` a horizontal strip of ``k`` boxes."""
    out = []
    target = size(shape) - k

    def build(row: int, acc: list):
        if row == len(shape):
            if sum(acc) == target:
                out.append(tuple(x for x in acc if x))
            return
        low = shape[row + 1] if row + 1 < len(shape) else 0
        for x in range(shape[row], low - 1, -1):
            build(row + 1, acc + [x])

    if k >= 0:
        build(0, [])
    return out


def _strip_boxes(shape: Partition, nu: Partition) -> tuple:
    nu = tuple(nu) + (0,) * (len(shape) - len(nu))
    return tuple((i + 1, j + 1) for i in range(len(shape)) for j in range(nu[i], shape[i]))


def enumerate_C(lam, r: int) -> list[StripPair]:
    """``C_{lam,r}``, ordered by complement shape (as listed) then by ``beta``."""
    lam = partition(lam)
    if r < n_lambda(lam):
        raise ValueError(f"need r >= n_lambda = {n_lambda(lam)}, got {r}")
    shape = extended_shape(lam, r + (lam[0] if lam else 0))
    out = []
    for nu in horizontal_strip_complements(shape, lam[0] if lam else 0):
        strip = _strip_boxes(shape, nu)
        out.extend(StripPair(strip, beta) for beta in enumerate_syt(nu))
    return out


def count_C(lam, r: int) -> dict:
    """``{complement shape: |SYT(shape)|}`` without materialising the fillings."""
    lam = partition(lam)
    shape = extended_shape(lam, r + (lam[0] if lam else 0))
    return {nu: syt_count(nu) for nu in horizontal_strip_complements(shape, lam[0] if lam else 0)}


def gamma_tableau(pair: StripPair, lam, r: int) -> FiniteSYT:
    """``beta`` on the complement and ``r+1, ..., r+lam_1`` column-standard on the strip."""
    lam = partition(lam)
    shape = extended_shape(lam, r + (lam[0] if lam else 0))
    nu = pair.beta.shape
    if pair.beta.size != r or not pair.beta.is_standard():
        raise ValueError(f"beta must be a standard filling of size {r}")
    if _strip_boxes(shape, nu) != tuple(sorted(pair.strip)):
        raise ValueError("strip and beta do not tile lam^(r + lam_1)")
    if not _is_horizontal(shape, nu):
        raise ValueError("strip has two boxes in one column")
    rows = [list(pair.beta.rows[i]) if i < len(pair.beta.rows) else [] for i in range(len(shape))]
    for label, (row, col) in enumerate(sorted(pair.strip, key=lambda b: b[1]), start=r + 1):
        rows[row - 1].append(label)
    return FiniteSYT(tuple(tuple(x) for x in rows))


def _is_horizontal(shape: Partition, nu: Partition) -> bool:
    nu = tuple(nu) + (0,) * (len(shape) - len(nu))
    return all(nu[i] <= shape[i] for i in range(len(shape))) and all(
        nu[i - 1] >= shape[i] for i in range(1, len(shape))
    )


# ---------------------------------------------------------------------------
# alpha and the trivial vectors
# ---------------------------------------------------------------------------

def _inner_rows(tau: StableSYT, r: int, n: int) -> tuple:
    """Rows of the sub-tableau of labels ``<= r`` inside ``lam^(n)``."""
    return tuple(tuple(x for x in row if x <= r) for row in tau.rows_at(n))


def _alpha_step(d: int) -> RatFunc:
    """``t (1 - t^{d-1}) / (1 - t^d)``: ratio ``alpha(s_j tau) / alpha(tau)`` for a cover of gap ``d``."""
    return T * one_minus_t_power(d - 1) / one_minus_t_power(d)


def _weight_step(d: int) -> RatFunc:
    """``(1 - t^d) / (1 - t^{d+1})``: ratio of the trivial-vector coefficients across the same cover."""
    return one_minus_t_power(d) / one_minus_t_power(d + 1)


def _descent_path(tau: StableSYT, r: int, n: int, path: str) -> list[tuple[StableSYT, int]] | None:
    """Moves ``s_j`` (``r < j < n``) taking ``tau`` down to the minimal filling of its strip.

    Returns ``(upper tableau, j)`` pairs in the order applied, or ``None`` when the labels
    ``> r`` do not fill a horizontal strip.
    """
    shape = extended_shape(tau.lam, n)
    nu = tuple(len(row) for row in _inner_rows(tau, r, n))
    if not _is_horizontal(shape, nu):
        return None
    steps = []
    cur = tau
    while True:
        downs = [j for j in range(r + 1, n) if classify_si(cur, j) is Move.COVER_DOWN]
        if not downs:
            return steps
        j = downs[0] if path == "first" else downs[-1]
        steps.append((cur, j))
        cur = apply_si(cur, j)


def alpha_coefficient(
    r: int, tau: StableSYT, n: int | None = None, path: Literal["first", "last"] = "first"
) -> tuple[RatFunc, StripPair | None]:
    """``(alpha_r(tau), (mu, beta))`` with ``eps_r^(n)(e_tau) = alpha_r(tau) * eps_r^(n)(e_gamma)``.

    ``gamma`` is the filling with ``beta`` on the labels ``<= r`` and the strip filled
    column-standard.  ``alpha`` is a product of cover factors along a descent path;
    ``path`` picks the first or last available descent at each step.  When the
    labels above ``r`` do not fill a horizontal strip the coefficient is 0 and the
    pair is ``None``.
    """
    lam = tau.lam
    lam1 = lam[0] if lam else 0
    n = r + max(lam1, tau.rank) if n is None else n
    if n < max(tau.rank, r):
        raise ValueError(f"level n = {n} is below rank {tau.rank}")
    steps = _descent_path(tau, r, n, path)
    if steps is None or r < size(lam):
        return ZERO, None
    alpha = ONE
    for upper, j in steps:
        alpha = alpha * _alpha_step(content(upper, j) - content(upper, j + 1))
    return alpha, _pair_for(lam, r, _inner_rows(tau, r, n))


def _pair_for(lam: Partition, r: int, inner_rows: tuple) -> StripPair | None:
    lam1 = lam[0] if lam else 0
    if r < n_lambda(lam):
        return None
    shape = extended_shape(lam, r + lam1)
    beta = FiniteSYT(inner_rows)
    return StripPair(_strip_boxes(shape, beta.shape), beta)


@lru_cache(maxsize=4096)
def trivial_vector(lam: Partition, r: int, n: int, inner_rows: tuple) -> SpechtVector:
    """``eps_r^(n)(e_gamma)`` for the filling ``gamma`` with ``inner_rows`` on labels ``<= r``.

    Writing ``v = sum_x x_tau e_tau`` over all fillings of the strip, self-adjointness of
    ``eps`` gives ``x_{s tau} / x_tau = (1 - t^d)/(1 - t^{d+1})`` across each cover and
    ``eps(v) = v`` fixes the scale: ``sum_tau x_tau alpha(tau) = 1``.
    """
    shape = extended_shape(lam, n)
    rows = [list(inner_rows[i]) if i < len(inner_rows) else [] for i in range(len(shape))]
    nu = tuple(len(x) for x in rows)
    if not _is_horizontal(shape, nu):
        raise ValueError("labels above r do not fill a horizontal strip")
    for label, (row, col) in enumerate(sorted(_strip_boxes(shape, nu), key=lambda b: b[1]), start=r + 1):
        rows[row - 1].append(label)
    gamma = StableSYT.from_rows(lam, rows)
    alpha = {gamma: ONE}
    weight = {gamma: ONE}
    queue = deque([gamma])
    while queue:
        cur = queue.popleft()
        for j in range(r + 1, n):
            if classify_si(cur, j) is Move.COVER_UP:
                nxt = apply_si(cur, j)
                if nxt not in alpha:
                    d = content(cur, j + 1) - content(cur, j)
                    alpha[nxt] = alpha[cur] * _alpha_step(d)
                    weight[nxt] = weight[cur] * _weight_step(d)
                    queue.append(nxt)
    total = ZERO
    for tau, a in alpha.items():
        total = total + a * weight[tau]
    scale = total.inverse()
    return linear_combination(lam, ((tau, w * scale) for tau, w in weight.items()))


def epsilon_level(r: int, tau: StableSYT, n: int) -> SpechtVector:
    """``eps_r^(n)(e_tau)`` for ``n >= rank(tau)`` via the cover-path formulas."""
    alpha, _ = alpha_coefficient(r, tau, n)
    if not alpha:
        return SpechtVector.zero(tau.lam)
    return trivial_vector(tau.lam, r, n, _inner_rows(tau, r, n)).scale(alpha)


def epsilon_stable(r: int, v: SpechtVector) -> SpechtVector:
    """Apply ``eps_r`` term by term at the level ``r + max(lam_1, rank(tau))``."""
    if r < 0:
        raise ValueError("r must be >= 0")
    lam1 = v.lam[0] if v.lam else 0
    pairs = []
    for tau, c in v.terms.items():
        w = epsilon_level(r, tau, r + max(lam1, tau.rank))
        pairs.extend((sigma, x * c) for sigma, x in w.terms.items())
    return linear_combination(v.lam, pairs)


def epsilon_fin_oracle(r: int, n: int, v: SpechtVector) -> SpechtVector:
    """``eps_r^(n)`` by expanding the finite sum over the Young subgroup (independent oracle)."""
    return act_on_specht(epsilon_fin(r, n), v)


def v_mu_beta(lam, r: int, pair: StripPair) -> SpechtVector:
    """``v_{mu,beta} = eps_r^(r+lam_1)(e_{gamma_{mu,beta}})``."""
    lam = partition(lam)
    gamma = gamma_tableau(pair, lam, r)
    return trivial_vector(lam, r, r + (lam[0] if lam else 0), _inner_rows_finite(gamma, r))


def _inner_rows_finite(gamma: FiniteSYT, r: int) -> tuple:
    return tuple(tuple(x for x in row if x <= r) for row in gamma.rows)


def stability_defect(r: int, tau: StableSYT, extra: int = 2) -> SpechtVector:
    """``eps_r^(r+m+extra)(e_tau) - eps_r^(r+m)(e_tau)`` with ``m = max(lam_1, rank(tau))``."""
    lam1 = tau.lam[0] if tau.lam else 0
    n = r + max(lam1, tau.rank)
    return epsilon_level(r, tau, n + extra) - epsilon_level(r, tau, n)


# ---------------------------------------------------------------------------
# dimension identities
# ---------------------------------------------------------------------------

def dimension_identity_check(lam, mu, r: int, m: int) -> Report:
    """``|SYT(lam^(r+m) / mu^(m))|`` against ``C(r, |lam/mu|) |SYT(lam/mu)|``."""
    lam, mu = partition(lam), partition(mu)
    if r < n_lambda(lam):
        raise ValueError(f"need r >= n_lambda = {n_lambda(lam)}")
    mu1, lam1 = (mu[0] if mu else 0), (lam[0] if lam else 0)
    if m < max(n_lambda(mu), size(mu) + lam1):
        raise ValueError("m is below max(n_mu, |mu| + lam_1)")
    actual = skew_syt_count(extended_shape(lam, r + m), extended_shape(mu, m))
    skew = skew_syt_count(lam, mu)
    expected = comb(r, size(lam) - size(mu)) * skew if skew else 0
    rep = Report(f"dimension lambda={lam} mu={mu} r={r} m={m}")
    rep.record("skew_count", actual == expected, f"{actual} != {expected}")
    rep.details["actual"] = str(actual)
    rep.details["expected"] = str(expected)
    return rep


def strip_count_check(lam, r: int) -> Report:
    """``|C_{lam,r}| = C(r, |lam|) |SYT(lam)|`` with the per-complement breakdown."""
    lam = partition(lam)
    parts = count_C(lam, r)
    actual = sum(parts.values())
    expected = comb(r, size(lam)) * syt_count(lam)
    rep = Report(f"strip count lambda={lam} r={r}")
    rep.record("count", actual == expected, f"{actual} != {expected}")
    rep.details["actual"] = str(actual)
    rep.details["expected"] = str(expected)
    rep.details["breakdown"] = ", ".join(f"{nu}:{k}" for nu, k in parts.items())
    rep.details["summary"] = f"{actual} = {expected}" if actual == expected else f"{actual} != {expected}"
    return rep
