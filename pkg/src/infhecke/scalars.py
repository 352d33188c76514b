"""Exact scalars: the field Q(t) with its t-adic valuation, and truncated Laurent series.

A :class:`RatFunc` is stored as ``c * N / D`` where ``c`` is a rational number
and ``N``, ``D`` are primitive integer polynomials (ascending coefficient
tuples) with positive leading coefficients and ``gcd(N, D) = 1``.  That triple
is unique for each element, so equality and hashing are structural.  The
public ``num``/``den`` views follow the usual convention (``den`` monic).

:class:`LaurentTrunc` is a Laurent polynomial known modulo ``t**error_order``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

INF = math.inf

Number = Union[int, Fraction]
IntPoly = tuple  # ascending tuple of ints, no trailing zeros; () is zero


# ---------------------------------------------------------------------------
# integer polynomial kernels
# ---------------------------------------------------------------------------

def _trim(a: list) -> tuple:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _padd(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pscale(a: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def _pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(b, a[0])
    if len(b) == 1:
        return _pscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _content(a: IntPoly) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(a: IntPoly) -> tuple[int, IntPoly]:
    """Split ``a`` as ``k * p`` with ``p`` primitive and ``lc(p) > 0``."""
    if not a:
        return 0, ()
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return 1, a
    return g, tuple(x // g for x in a)


def _ord(a: IntPoly) -> int:
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("order of the zero polynomial")


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    r = list(a)
    lb = b[-1]
    nb = len(b)
    while len(r) >= nb:
        lr = r[-1]
        shift = len(r) - nb
        if lb != 1:
            r = [x * lb for x in r]
        for j in range(nb):
            r[j + shift] -= lr * b[j]
        r = list(_trim(r))
    return tuple(r)


def _pgcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if a == (1,) or b == (1,):
        return (1,)
    # factor out the common power of t first; it is cheap and very common here
    sa, sb = _ord(a), _ord(b)
    s = min(sa, sb)
    a, b = a[sa:], b[sb:]
    if len(a) < len(b):
        a, b = b, a
    a = _primitive(a)[1]
    b = _primitive(b)[1]
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive(r)[1]
    else:
        b = (1,)
    return (0,) * s + b


def _pdiv_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient of ``a`` by ``b`` when ``b`` divides ``a`` in Z[t]."""
    if b == (1,):
        return a
    r = list(a)
    nb = len(b)
    lb = b[-1]
    q = [0] * (len(a) - nb + 1)
    for k in range(len(q) - 1, -1, -1):
        top = r[k + nb - 1]
        if top:
            qk, rem = divmod(top, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = qk
            for j in range(nb):
                r[k + j] -= qk * b[j]
    if any(r[: nb - 1]):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _frac_poly_to_int(coeffs: Iterable[Fraction]) -> tuple[Fraction, IntPoly]:
    """Write a rational polynomial as ``c * P`` with ``P`` primitive integral, lc > 0."""
    coeffs = [Fraction(x) for x in coeffs]
    if not any(coeffs):
        return Fraction(0), ()
    den = 1
    for x in coeffs:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = _trim([int(x * den) for x in coeffs])
    k, p = _primitive(ints)
    return Fraction(k, den), p


# ---------------------------------------------------------------------------
# Poly: polynomials with rational coefficients
# ---------------------------------------------------------------------------

class Poly:
    """Polynomial in ``t`` over Q, coefficients ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def t(cls, k: int = 1) -> Poly:
        return cls([0] * k + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> float:
        if not self.coeffs:
            return INF
        return next(i for i, x in enumerate(self.coeffs) if x)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: Poly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(r) - len(other.coeffs) + 1)
        lb = other.coeffs[-1]
        for k in range(len(q) - 1, -1, -1):
            qk = r[k + len(other.coeffs) - 1] / lb
            q[k] = qk
            if qk:
                for j, y in enumerate(other.coeffs):
                    r[k + j] -= qk * y
        return Poly(q), Poly(r[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly(x / lc for x in self.coeffs)

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self.coeffs)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

def _as_int_triple(x) -> tuple[Fraction, IntPoly]:
    if isinstance(x, Poly):
        return _frac_poly_to_int(x.coeffs)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return (x, (1,)) if x else (Fraction(0), ())
    raise TypeError(f"cannot build a rational function from {type(x).__name__}")


class RatFunc:
    """An element of Q(t) in canonical reduced form.  Immutable."""

    __slots__ = ("_c", "_n", "_d", "_hash")

    def __init__(self, num: Number | Poly = 0, den: Number | Poly = 1):
        cn, n = _as_int_triple(num)
        cd, d = _as_int_triple(den)
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if not n:
            self._set(Fraction(0), (1,), (1,))
            return
        g = _pgcd(n, d)
        if g != (1,):
            n, d = _pdiv_exact(n, g), _pdiv_exact(d, g)
        self._set(cn / cd, n, d)

    def _set(self, c, n, d):
        self._c = c
        self._n = n
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, c: Fraction, n: IntPoly, d: IntPoly) -> RatFunc:
        obj = cls.__new__(cls)
        if not c:
            obj._set(Fraction(0), (1,), (1,))
        else:
            obj._set(c, n, d)
        return obj

    @classmethod
    def t_power(cls, k: int) -> RatFunc:
        """``t**k`` for any integer ``k``."""
        mono = (0,) * abs(k) + (1,)
        if k >= 0:
            return cls._raw(Fraction(1), mono, (1,))
        return cls._raw(Fraction(1), (1,), mono)

    @classmethod
    def const(cls, x: Number) -> RatFunc:
        x = Fraction(x)
        return cls._raw(x, (1,), (1,))

    # -- views ---------------------------------------------------------------
    @property
    def num(self) -> Poly:
        lc = self._d[-1]
        return Poly(self._c * x / lc for x in self._n) if self._c else Poly()

    @property
    def den(self) -> Poly:
        lc = self._d[-1]
        return Poly(Fraction(x, lc) for x in self._d)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_polynomial(self) -> bool:
        return self._d == (1,)

    def valuation(self) -> float:
        """t-adic order ``ord_t(num) - ord_t(den)``; ``inf`` for zero."""
        if not self._c:
            return INF
        return _ord(self._n) - _ord(self._d)

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        if isinstance(other, Poly):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        if not self._c:
            return other
        c1, c2 = self._c, other._c
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if d1 == d2:
            g, e1, e2 = d1, (1,), (1,)
        else:
            g = _pgcd(d1, d2)
            e1 = _pdiv_exact(d1, g)
            e2 = _pdiv_exact(d2, g)
        p1, q1 = c1.numerator, c1.denominator
        p2, q2 = c2.numerator, c2.denominator
        m = _padd(_pscale(_pmul(n1, e2), p1 * q2), _pscale(_pmul(n2, e1), p2 * q1))
        if not m:
            return RatFunc._raw(Fraction(0), (1,), (1,))
        k, m = _primitive(m)
        den = _pmul(g, _pmul(e1, e2))
        if g != (1,):
            h = _pgcd(m, g)
            if h != (1,):
                m = _pdiv_exact(m, h)
                den = _pdiv_exact(den, h)
        return RatFunc._raw(Fraction(k, q1 * q2), m, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self._c, self._n, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return RatFunc._raw(Fraction(0), (1,), (1,))
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if d2 != (1,) and n1 != (1,):
            g = _pgcd(n1, d2)
            if g != (1,):
                n1, d2 = _pdiv_exact(n1, g), _pdiv_exact(d2, g)
        if d1 != (1,) and n2 != (1,):
            g = _pgcd(n2, d1)
            if g != (1,):
                n2, d1 = _pdiv_exact(n2, g), _pdiv_exact(d1, g)
        return RatFunc._raw(self._c * other._c, _pmul(n1, n2), _pmul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self._c:
            raise ZeroDivisionError("inverse of zero in Q(t)")
        return RatFunc._raw(1 / self._c, self._d, self._n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._c, self._n, self._d))
        return self._hash

    def __call__(self, x):
        """Evaluate at ``x`` (exact for ``Fraction`` input)."""
        return self.num(x) / self.den(x)

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        return format_ratfunc(self)


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Apply ``op`` in {add, sub, mul, div}; division by zero raises ``ZeroDivisionError``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def valuation(f: RatFunc) -> float:
    return f.valuation()


T = RatFunc.t_power(1)
ONE = RatFunc.const(1)
ZERO = RatFunc.const(0)


@lru_cache(maxsize=None)
def one_minus_t_power(k: int) -> RatFunc:
    """``1 - t**k``; for ``k <= 0`` this is still a legal element of Q(t)."""
    if k >= 0:
        return RatFunc(Poly([1] + [0] * (k - 1) + [-1])) if k else ZERO
    return ONE - RatFunc.t_power(k)


def q_integer(n: int) -> Poly:
    """``[n]_t = 1 + t + ... + t**(n-1)``."""
    return Poly([1] * n)


def q_factorial(n: int) -> Poly:
    """``[n]_t! = [1]_t [2]_t ... [n]_t`` (``1`` for ``n = 0``)."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = Poly([1])
    for j in range(1, n + 1):
        out = out * q_integer(j)
    return out


# ---------------------------------------------------------------------------
# Truncated Laurent series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentTrunc:
    """``sum coeffs[k] t**(min_order + k) + O(t**error_order)``.

    ``coeffs`` covers every exponent from ``min_order`` to ``error_order - 1``.
    In canonical form ``coeffs[0] != 0`` unless the window is empty, in which
    case ``min_order == error_order``.
    """

    min_order: int
    coeffs: tuple
    error_order: int

    def __post_init__(self):
        mo, eo = self.min_order, self.error_order
        c = [Fraction(x) for x in self.coeffs]
        c = c[: max(0, eo - mo)]
        c += [Fraction(0)] * (eo - mo - len(c))
        lead = 0
        while lead < len(c) and c[lead] == 0:
            lead += 1
        c = c[lead:]
        object.__setattr__(self, "min_order", min(mo + lead, eo))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_dict(cls, terms: dict, error_order: int) -> LaurentTrunc:
        live = {k: v for k, v in terms.items() if v and k < error_order}
        if not live:
            return cls(error_order, (), error_order)
        lo = min(live)
        return cls(lo, tuple(live.get(k, 0) for k in range(lo, error_order)), error_order)

    @classmethod
    def zero(cls, error_order: int) -> LaurentTrunc:
        return cls(error_order, (), error_order)

    def coeff(self, k: int) -> Fraction:
        if k >= self.error_order:
            raise ValueError(f"coefficient of t^{k} is not certified (error order {self.error_order})")
        if k < self.min_order:
            return Fraction(0)
        return self.coeffs[k - self.min_order]

    def terms(self) -> dict:
        return {self.min_order + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        """True when every certified coefficient vanishes."""
        return not self.coeffs

    def truncated(self, error_order: int) -> LaurentTrunc:
        return LaurentTrunc.from_dict(self.terms(), min(error_order, self.error_order))

    def shifted(self, k: int) -> LaurentTrunc:
        """Multiply by ``t**k``."""
        return LaurentTrunc(self.min_order + k, self.coeffs, self.error_order + k)

    def scaled(self, x: Number) -> LaurentTrunc:
        x = Fraction(x)
        if not x:
            return LaurentTrunc.zero(self.error_order)
        return LaurentTrunc(self.min_order, tuple(c * x for c in self.coeffs), self.error_order)

    def __add__(self, other: LaurentTrunc) -> LaurentTrunc:
        eo = min(self.error_order, other.error_order)
        out = dict(self.terms())
        for k, v in other.terms().items():
            out[k] = out.get(k, 0) + v
        return LaurentTrunc.from_dict(out, eo)

    def __neg__(self):
        return LaurentTrunc(self.min_order, tuple(-c for c in self.coeffs), self.error_order)

    def __sub__(self, other: LaurentTrunc) -> LaurentTrunc:
        return self + (-other)

    def __mul__(self, other: LaurentTrunc) -> LaurentTrunc:
        eo = min(self.error_order + other.min_order, other.error_order + self.min_order)
        out: dict = {}
        for i, a in self.terms().items():
            for j, b in other.terms().items():
                if i + j < eo:
                    out[i + j] = out.get(i + j, 0) + a * b
        return LaurentTrunc.from_dict(out, eo)

    def agrees_with(self, other: LaurentTrunc) -> bool:
        """Equal on every exponent both sides certify."""
        eo = min(self.error_order, other.error_order)
        return self.truncated(eo) == other.truncated(eo)

    def to_json(self) -> dict:
        return {
            "min_order": self.min_order,
            "coeffs": [[k, str(v)] for k, v in sorted(self.terms().items())],
            "error_order": self.error_order,
        }

    @classmethod
    def from_json(cls, obj: dict) -> LaurentTrunc:
        terms = {int(k): Fraction(v) for k, v in obj["coeffs"]}
        out = cls.from_dict(terms, int(obj["error_order"]))
        if terms and out.min_order != int(obj["min_order"]):
            raise ValueError("min_order does not match the first nonzero coefficient")
        return out

    def __str__(self):
        body = format_poly_terms(self.terms())
        return f"{body} + O(t^{self.error_order})"


def laurent_arith(a: LaurentTrunc, b: LaurentTrunc, op: str) -> LaurentTrunc:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def series_coefficients(f: RatFunc, K: int) -> dict:
    """Coefficients of the Laurent expansion of ``f`` at ``t = 0`` up to ``t**K`` (sparse)."""
    if f.is_zero():
        return {}
    n, d = f._n, f._d
    sn, sd = _ord(n), _ord(d)
    n, d = n[sn:], d[sd:]
    v = sn - sd
    length = K - v + 1
    if length <= 0:
        return {}
    d0 = d[0]
    unit = d0 in (1, -1)
    s: list = []
    for k in range(length):
        acc = n[k] if k < len(n) else 0
        for j in range(1, min(k, len(d) - 1) + 1):
            acc -= d[j] * s[k - j]
        s.append(acc * d0 if unit else Fraction(acc, 1) / d0)
    c = f._c
    return {v + k: c * x for k, x in enumerate(s) if x}


def truncate(f: RatFunc, K: int) -> LaurentTrunc:
    """Laurent expansion of ``f`` through ``t**K`` (error order ``K + 1``)."""
    return LaurentTrunc.from_dict(series_coefficients(f, K), K + 1)


# ---------------------------------------------------------------------------
# text rendering and parsing
# ---------------------------------------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly_terms(terms: dict) -> str:
    """Ascending sparse rendering, e.g. ``1 - t^2 + 3/2*t^5``."""
    items = [(k, Fraction(v)) for k, v in sorted(terms.items()) if v]
    if not items:
        return "0"
    parts = []
    for idx, (k, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _fmt_coeff(a)
        elif a == 1:
            body = f"t^{k}"
        else:
            body = f"{_fmt_coeff(a)}*t^{k}"
        if idx == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def format_poly(coeffs) -> str:
    return format_poly_terms(dict(enumerate(coeffs)))


def format_ratfunc(f: RatFunc) -> str:
    if f.is_zero():
        return "0"
    num = format_poly(f.num.coeffs)
    if f.is_polynomial():
        return num
    return f"({num})/({format_poly(f.den.coeffs)})"


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(t(?:\s*\^\s*(-?\d+))?)?\s*"
)


def parse_poly(text: str) -> RatFunc:
    """Parse a sum of monomials ``c``, ``c*t^k``, ``t^k`` (negative ``k`` allowed)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial literal")
    pos = 0
    acc = ZERO
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, coeff, tpart, exp = m.groups()
        if coeff is None and tpart is None:
            raise ValueError(f"dangling sign in {text!r}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if tpart is None else (int(exp) if exp is not None else 1)
        acc = acc + RatFunc.t_power(k) * c
        pos = m.end()
        first = False
    return acc


def _split_top(s: str, sep: str) -> list[str]:
    depth, out, cur = 0, [], []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {s!r}")
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced parentheses in {s!r}")
    out.append("".join(cur))
    return out


def _strip_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += (ch == "(") - (ch == ")")
            if depth == 0 and i < len(s) - 1:
                return s  # the first group closes early: "(a)/(b)"
        s = s[1:-1].strip()
    return s


def parse_ratfunc(text: str) -> RatFunc:
    """Parse ``num``, ``(num)/(den)`` or a product ``(a)/(b)/(c)`` of polynomial literals.

    A bare rational such as ``3/4`` is read as a constant, not as a quotient.
    """
    s = _strip_parens(text)
    pieces = _split_top(s, "/")
    if len(pieces) > 1 and "(" not in s:
        # plain "3/4" or "1/2*t^3": the slash belongs to a coefficient
        return parse_poly(s)
    out = None
    for piece in pieces:
        p = _strip_parens(piece)
        val = parse_ratfunc(p) if "(" in p else parse_poly(p)
        out = val if out is None else out / val
    return out
