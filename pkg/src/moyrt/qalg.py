"""Exact Laurent polynomials in q, the tau-extension, and quantum integers.

Exponents are stored in half units: the stored key ``e`` stands for
``q^(e/2)``.  Vertex weights and cup/cap turning both produce half-integer
powers of q, which cancel in every closed evaluation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "TauPoly",
    "q",
    "quantum_int",
    "quantum_factorial",
    "quantum_binomial",
    "quantum_binomial_partition_sum",
    "shift_q",
    "substitute_tau_one",
    "evaluate_at",
]


class LaurentPoly:
    """Integer Laurent polynomial in q^(1/2), immutable once built."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be integers")
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # trusted constructor: terms already free of zeros
        p = object.__new__(cls)
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    @classmethod
    def monomial(cls, half_exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({half_exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the half-exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        """True when every exponent is a whole power of q."""
        return all(e % 2 == 0 for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def coeff(self, half_exp: int) -> int:
        return self._terms.get(half_exp, 0)

    def integer_terms(self) -> dict[int, int]:
        """Exponent map in whole powers of q; requires integrality."""
        if not self.is_integral():
            raise ValueError(f"{self} has half-integer exponents")
        return {e // 2: c for e, c in self._terms.items()}

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be inverted")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({-e * (-n): c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, half_units: int) -> "LaurentPoly":
        """Multiply by q^(half_units/2)."""
        return LaurentPoly._raw({e + half_units: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def divmod_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ValueError if divisor does not divide self."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        d_top = divisor.max_exp()
        d_lead = divisor._terms[d_top]
        d_bottom = divisor.min_exp()
        while rem:
            top = max(rem)
            c = rem[top]
            if c % d_lead or top - d_top < self.min_exp() - d_bottom:
                raise ValueError("polynomial division is not exact")
            k, e = c // d_lead, top - d_top
            quot[e] = quot.get(e, 0) + k
            for de, dc in divisor._terms.items():
                v = rem.get(de + e, 0) - k * dc
                if v:
                    rem[de + e] = v
                else:
                    rem.pop(de + e, None)
        return LaurentPoly(quot)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render(self)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x}) if x else ZERO
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
q = LaurentPoly({2: 1})


def shift_q(p: LaurentPoly, half_units: int) -> LaurentPoly:
    return p.shift(half_units)


def evaluate_at(p: LaurentPoly, q0) -> Fraction:
    """Exact value of p at the rational point q = q0.

    Half-integer exponents need q0 to be the square of a rational.
    """
    q0 = Fraction(q0)
    if p.is_integral():
        return sum((Fraction(c) * q0 ** (e // 2) for e, c in p.items()), Fraction(0))
    root = _rational_sqrt(q0)
    if root is None:
        raise ValueError(f"q^(1/2) is irrational at q = {q0}")
    return sum((Fraction(c) * root ** e for e, c in p.items()), Fraction(0))


def _rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


# -- rendering and parsing ----------------------------------------------------


def _render_exp(e: int) -> str:
    if e % 2 == 0:
        k = e // 2
        return "q" if k == 1 else f"q^{k}"
    return f"q^({e}/2)"


def render(p: LaurentPoly) -> str:
    """Canonical text form, ascending exponents, e.g. ``q^-1 + 2 - 3*q^(5/2)``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        elif a == 1:
            body = _render_exp(e)
        else:
            body = f"{a}*{_render_exp(e)}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+)\s*\*?\s*)?
        (?P<q>q(?:\^(?:\((?P<frac>-?\d+)/2\)|\((?P<paren>-?\d+)\)|(?P<int>-?\d+)))?)?
        \s*""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Inverse of :func:`render`; tolerant of spacing and an omitted ``*``."""
    text = text.strip()
    if text == "0":
        return ZERO
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("q") is None):
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator before {text[pos:]!r}")
        first = False
        c = int(m.group("coef")) if m.group("coef") else 1
        if m.group("sign") == "-":
            c = -c
        if m.group("q") is None:
            e = 0
        elif m.group("frac") is not None:
            e = int(m.group("frac"))
        elif m.group("paren") is not None:
            e = 2 * int(m.group("paren"))
        elif m.group("int") is not None:
            e = 2 * int(m.group("int"))
        else:
            e = 2
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(terms)


# -- tau extension --------------------------------------------------------------


class TauPoly:
    """``even + tau * odd`` with tau^2 = 1."""

    __slots__ = ("even", "odd")

    def __init__(self, even: LaurentPoly | int = 0, odd: LaurentPoly | int = 0):
        self.even = _coerce(even)
        self.odd = _coerce(odd)

    @classmethod
    def tau(cls) -> "TauPoly":
        return cls(ZERO, ONE)

    def __add__(self, other):
        other = _tau_coerce(other)
        return TauPoly(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __neg__(self):
        return TauPoly(-self.even, -self.odd)

    def __sub__(self, other):
        return self + (-_tau_coerce(other))

    def __mul__(self, other):
        other = _tau_coerce(other)
        return TauPoly(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )

    __rmul__ = __mul__

    def shift(self, half_units: int) -> "TauPoly":
        return TauPoly(self.even.shift(half_units), self.odd.shift(half_units))

    def __eq__(self, other):
        other = _tau_coerce(other)
        return self.even == other.even and self.odd == other.odd

    def __hash__(self):
        return hash((self.even, self.odd))

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __repr__(self):
        return f"TauPoly({self})"

    def __str__(self):
        if self.odd.is_zero():
            return str(self.even)
        odd = f"tau*({self.odd})"
        return odd if self.even.is_zero() else f"{self.even} + {odd}"


def _tau_coerce(x) -> TauPoly:
    if isinstance(x, TauPoly):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return TauPoly(x, 0)
    raise TypeError(f"cannot use {type(x).__name__} as TauPoly")


def substitute_tau_one(p: TauPoly) -> LaurentPoly:
    return p.even + p.odd


# -- quantum integers -------------------------------------------------------------


@lru_cache(maxsize=None)
def quantum_int(n: int) -> LaurentPoly:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError(f"quantum_int needs n >= 0, got {n}")
    return LaurentPoly({2 * (n - 1 - 2 * i): 1 for i in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum_factorial needs n >= 0, got {n}")
    out = ONE
    for j in range(1, n + 1):
        out = out * quantum_int(j)
    return out


@lru_cache(maxsize=None)
def quantum_binomial(m: int, k: int) -> LaurentPoly:
    """[m choose k] as a quotient of quantum factorials; 0 outside 0 <= k <= m."""
    if m < 0:
        raise ValueError(f"quantum_binomial needs m >= 0, got {m}")
    if k < 0 or k > m:
        return ZERO
    num = quantum_factorial(m)
    den = quantum_factorial(k) * quantum_factorial(m - k)
    return num.divmod_exact(den)


def _box_partitions(rows: int, cols: int, max_part: int | None = None):
    # partitions with at most `rows` parts, each <= min(cols, max_part)
    if max_part is None:
        max_part = cols
    if rows == 0:
        yield ()
        return
    yield ()
    for first in range(1, min(cols, max_part) + 1):
        for rest in _box_partitions(rows - 1, cols, first):
            yield (first,) + rest


def quantum_binomial_partition_sum(m: int, n: int) -> LaurentPoly:
    """q^(-mn) * sum of q^(2|lam|) over partitions lam inside the m x n box."""
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be non-negative")
    acc: dict[int, int] = {}
    for lam in _box_partitions(m, n):
        e = 2 * (2 * sum(lam) - m * n)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)
