"""Elements of the infinite Hecke algebra in the ``T_sigma`` basis.

Permutations of ``{1, 2, 3, ...}`` with finite support are stored in one-line
notation on the shortest window ``1..m`` outside of which they are the
identity.  ``sigma * s_i`` swaps positions ``i, i+1``; ``s_i * sigma`` swaps the
values ``i, i+1``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .limits import ResourceCapError, max_idempotent_n
from .scalars import ONE, T, ZERO, RatFunc, format_ratfunc, parse_ratfunc, q_factorial
from .specht import SpechtVector, act_T, linear_combination, t_structure


@dataclass(frozen=True)
class Permutation:
    """One-line images ``(sigma(1), ..., sigma(m))``; trailing fixed points are dropped."""

    images: tuple = ()

    def __post_init__(self):
        img = tuple(int(x) for x in self.images)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {img}")
        while img and img[-1] == len(img):
            img = img[:-1]
        object.__setattr__(self, "images", img)

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @classmethod
    def from_word(cls, word: Iterable[int]) -> Permutation:
        """``s_{i_1} s_{i_2} ... s_{i_r}``."""
        p = cls.identity()
        for i in word:
            p = p.times_s(i)
        return p

    def __call__(self, j: int) -> int:
        return self.images[j - 1] if j <= len(self.images) else j

    @property
    def window(self) -> int:
        return len(self.images)

    def padded(self, m: int) -> tuple:
        return self.images + tuple(range(len(self.images) + 1, m + 1))

    def times_s(self, i: int) -> Permutation:
        """``sigma * s_i``."""
        img = list(self.padded(max(self.window, i + 1)))
        img[i - 1], img[i] = img[i], img[i - 1]
        return Permutation(tuple(img))

    def s_times(self, i: int) -> Permutation:
        """``s_i * sigma``."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(x, x) for x in self.padded(max(self.window, i + 1))))

    def inverse(self) -> Permutation:
        inv = [0] * self.window
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def __mul__(self, other: Permutation) -> Permutation:
        m = max(self.window, other.window)
        return Permutation(tuple(self(other(j)) for j in range(1, m + 1)))

    def length(self) -> int:
        img = self.images
        return sum(1 for a in range(len(img)) for b in range(a + 1, len(img)) if img[a] > img[b])

    def has_right_descent(self, i: int) -> bool:
        return self(i) > self(i + 1)

    def has_left_descent(self, i: int) -> bool:
        inv = self.inverse()
        return inv(i) > inv(i + 1)

    def to_json(self) -> list:
        return list(self.images)

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"


@lru_cache(maxsize=None)
def reduced_word(sigma: Permutation) -> tuple:
    """A reduced word for ``sigma``: strip the first right descent until the identity is left."""
    collected = []
    p = sigma
    while p.window:
        i = next(i for i in range(1, p.window) if p(i) > p(i + 1))
        collected.append(i)
        p = p.times_s(i)
    return tuple(reversed(collected))


# ---------------------------------------------------------------------------
# Hecke elements
# ---------------------------------------------------------------------------

class HeckeElement:
    """``sum_sigma c_sigma T_sigma`` with nonzero ``RatFunc`` coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: RatFunc._coerce(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, sigma: Permutation, coeff=ONE) -> HeckeElement:
        return cls({sigma: coeff})

    @classmethod
    def one(cls) -> HeckeElement:
        return cls.basis(Permutation.identity())

    @classmethod
    def generator(cls, i: int) -> HeckeElement:
        return cls.basis(Permutation.from_word([i]))

    @classmethod
    def generator_inverse(cls, i: int) -> HeckeElement:
        """``T_i^{-1} = t^{-1} T_i + (1 - t^{-1})``."""
        tinv = T.inverse()
        return cls({Permutation.from_word([i]): tinv, Permutation.identity(): ONE - tinv})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, sigma: Permutation) -> RatFunc:
        return self.terms.get(sigma, ZERO)

    def support(self) -> list[Permutation]:
        return sorted(self.terms, key=lambda p: (p.length(), p.images))

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return HeckeElement(out)

    def __neg__(self):
        return HeckeElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> HeckeElement:
        c = RatFunc._coerce(c)
        return HeckeElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def times_generator(self, i: int) -> HeckeElement:
        """``X * T_i``."""
        out: dict = {}
        for sigma, c in self.terms.items():
            up = sigma.times_s(i)
            if not sigma.has_right_descent(i):
                out[up] = out.get(up, ZERO) + c
            else:
                out[sigma] = out.get(sigma, ZERO) + c * (ONE - T)
                out[up] = out.get(up, ZERO) + c * T
        return HeckeElement(out)

    def generator_times(self, i: int) -> HeckeElement:
        """``T_i * X``."""
        out: dict = {}
        for sigma, c in self.terms.items():
            up = sigma.s_times(i)
            if not sigma.has_left_descent(i):
                out[up] = out.get(up, ZERO) + c
            else:
                out[sigma] = out.get(sigma, ZERO) + c * (ONE - T)
                out[up] = out.get(up, ZERO) + c * T
        return HeckeElement(out)

    def to_json(self) -> list:
        return [{"perm": s.to_json(), "coeff": format_ratfunc(self.terms[s])} for s in self.support()]

    @classmethod
    def from_json(cls, obj: list) -> HeckeElement:
        return cls({Permutation(tuple(d["perm"])): parse_ratfunc(str(d["coeff"])) for d in obj})

    def __repr__(self):
        return f"HeckeElement({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s in self.support():
            word = reduced_word(s)
            name = " ".join(f"T{i}" for i in word) if word else "1"
            parts.append(f"({format_ratfunc(self.terms[s])}) {name}")
        return " + ".join(parts)


def hecke_mul(X: HeckeElement, Y: HeckeElement) -> HeckeElement:
    """``X * Y``: right-multiply ``X`` along a reduced word of each ``T_tau`` in ``Y``.

    Partial products ``X * T_{prefix}`` are shared between words with common prefixes.
    """
    cache: dict = {(): X}

    def prefix_product(word: tuple) -> HeckeElement:
        if word not in cache:
            cache[word] = prefix_product(word[:-1]).times_generator(word[-1])
        return cache[word]

    out = HeckeElement()
    for tau, c in Y.terms.items():
        out = out + prefix_product(reduced_word(tau)).scale(c)
    return out


def t_sigma(word: Iterable[int]) -> HeckeElement:
    """``T_{i_1} T_{i_2} ... T_{i_r}`` (the basis element ``T_sigma`` when the word is reduced)."""
    x = HeckeElement.one()
    for i in word:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        x = x.times_generator(i)
    return x


def iota(X: HeckeElement) -> HeckeElement:
    """The anti-automorphism ``T_sigma -> T_{sigma^{-1}}``."""
    return HeckeElement({s.inverse(): c for s, c in X.terms.items()})


def coeff_valuation(X: HeckeElement) -> float:
    """``min`` of the coefficient valuations (``inf`` for zero)."""
    return min((c.valuation() for c in X.terms.values()), default=float("inf"))


def theta_element(i: int) -> HeckeElement:
    """``theta_i = t^{i-1} T_{i-1}^{-1} ... T_1^{-1} T_1^{-1} ... T_{i-1}^{-1}``."""
    x = HeckeElement.one()
    for j in list(range(i - 1, 0, -1)) + list(range(1, i)):
        x = x * HeckeElement.generator_inverse(j)
    return x.scale(RatFunc.t_power(i - 1))


def epsilon_fin(k: int, n: int) -> HeckeElement:
    """``eps_k^(n) = [n-k]_t!^{-1} sum_{sigma in S_{1^k, n-k}} t^{C(n-k, 2) - l(sigma)} T_sigma``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    # checked outside the cache so a lowered cap applies to cached values too
    if n > max_idempotent_n():
        raise ResourceCapError(f"n = {n} exceeds the idempotent cap {max_idempotent_n()}")
    return _epsilon_fin(k, n)


@lru_cache(maxsize=None)
def _epsilon_fin(k: int, n: int) -> HeckeElement:
    m = n - k
    norm = RatFunc(q_factorial(m)).inverse()
    top = comb(m, 2)
    terms = {}
    for perm in itertools.permutations(range(k + 1, n + 1)):
        sigma = Permutation(tuple(range(1, k + 1)) + perm)
        terms[sigma] = RatFunc.t_power(top - sigma.length()) * norm
    return HeckeElement(terms)


def act_on_specht(X: HeckeElement, v: SpechtVector, rule=t_structure) -> SpechtVector:
    """The module action; ``T_sigma`` acts through a reduced word, suffix products shared."""
    cache: dict = {(): v}

    def suffix_action(word: tuple) -> SpechtVector:
        if word not in cache:
            cache[word] = act_T(word[0], suffix_action(word[1:]), rule)
        return cache[word]

    pairs = []
    for sigma, c in X.terms.items():
        w = suffix_action(reduced_word(sigma))
        pairs.extend((tau, x * c) for tau, x in w.terms.items())
    return linear_combination(v.lam, pairs)


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

_GEN = re.compile(r"T(\d+)")


def _split_terms(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    parts.append(cur)
    return parts


def parse_element(text: str) -> HeckeElement:
    """Parse e.g. ``"T1 T2 T1"``, ``"(t^2) T1 + (1-t) T2 T3"`` or ``"1"`` (= ``T_e``).

    Terms are separated by top-level ``+``; each is an optional parenthesised
    scalar followed by generator tokens ``T<i>`` (``i >= 1``).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty Hecke element")
    out = HeckeElement()
    for raw in _split_terms(text):
        term = raw.strip()
        if not term:
            raise ValueError(f"empty term in {text!r}")
        coeff = ONE
        if term.startswith("("):
            depth = 0
            for pos, ch in enumerate(term):
                depth += ch == "("
                depth -= ch == ")"
                if depth == 0:
                    break
            coeff = parse_ratfunc(term[1:pos])
            term = term[pos + 1:].strip().lstrip("*").strip()
        if term in ("", "1"):
            word: list[int] = []
        else:
            tokens = term.replace("*", " ").split()
            word = []
            for tok in tokens:
                m = _GEN.fullmatch(tok)
                if not m or int(m.group(1)) < 1:
                    raise ValueError(f"bad generator token {tok!r} in {text!r}")
                word.append(int(m.group(1)))
        out = out + t_sigma(word).scale(coeff)
    return out
