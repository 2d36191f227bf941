"""Exact rationals and truncated even power series in the genus variable u.

Every generating function in the blow-up formulae is a series in ``u**2``, so
an :class:`EvenSeries` stores only the coefficients of ``u**(2g)`` for
``g = 0..order``.  Coefficients above the order are unknown, not zero; binary
operations truncate to the smaller order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import ParseError, ZeroConstantTerm

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational",
    "EvenSeries",
    "as_rational",
    "format_rational",
    "parse_rational",
    "series_add",
    "series_mul",
    "series_inverse",
    "series_pow",
    "sinc_half",
    "sinc_scaled",
    "sin_u_over_u",
    "unit_series",
    "zero_series",
]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str, field: str = "value") -> Fraction:
    m = _RATIONAL_RE.match(text) if isinstance(text, str) else None
    if m is None:
        raise ParseError(f"{field}: malformed rational {text!r} (expected 'p/q')")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"{field}: zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, eq=False)
class EvenSeries:
    """Truncated series ``sum_g coeffs[g] * u**(2g)`` with known range 0..order."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        values = tuple(as_rational(c) for c in coeffs)
        if not values:
            raise ValueError("an EvenSeries needs at least the constant term")
        object.__setattr__(self, "coeffs", values)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, g: int) -> Fraction:
        if not 0 <= g <= self.order:
            raise IndexError(f"coefficient u^{2 * g} is beyond truncation order {self.order}")
        return self.coeffs[g]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> EvenSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} up to {order}")
        return EvenSeries(self.coeffs[: order + 1])

    # Equality is only meaningful on the common known range.
    def __eq__(self, other) -> bool:
        if not isinstance(other, EvenSeries):
            return NotImplemented
        n = min(len(self), len(other))
        return self.coeffs[:n] == other.coeffs[:n]

    __hash__ = None

    def __add__(self, other: EvenSeries) -> EvenSeries:
        return series_add(self, other)

    def __sub__(self, other: EvenSeries) -> EvenSeries:
        return series_add(self, other.scale(-1))

    def __neg__(self) -> EvenSeries:
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, EvenSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> EvenSeries:
        return series_pow(self, k)

    def scale(self, c: RationalLike) -> EvenSeries:
        c = as_rational(c)
        return EvenSeries(c * a for a in self.coeffs)

    def substitute_scaled(self, d: int) -> EvenSeries:
        """The series of ``f(d*u)``: coefficient g picks up ``d**(2g)``."""
        return EvenSeries(a * d ** (2 * g) for g, a in enumerate(self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"EvenSeries([{body}])"


def unit_series(order: int) -> EvenSeries:
    return EvenSeries([1] + [0] * order)


def zero_series(order: int) -> EvenSeries:
    return EvenSeries([0] * (order + 1))


def series_add(a: EvenSeries, b: EvenSeries) -> EvenSeries:
    n = min(len(a), len(b))
    return EvenSeries(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n]))


def series_mul(a: EvenSeries, b: EvenSeries) -> EvenSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(len(a), len(b))
    ac, bc = a.coeffs, b.coeffs
    out = []
    for g in range(n):
        out.append(sum((ac[i] * bc[g - i] for i in range(g + 1)), Fraction(0)))
    return EvenSeries(out)


def series_inverse(a: EvenSeries) -> EvenSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroConstantTerm("cannot invert a series with zero constant term")
    b = [1 / a0]
    for g in range(1, len(a)):
        s = sum((a.coeffs[k] * b[g - k] for k in range(1, g + 1)), Fraction(0))
        b.append(-s / a0)
    return EvenSeries(b)


def series_pow(a: EvenSeries, k: int) -> EvenSeries:
    """Integer power by repeated squaring; negative powers go through the inverse."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("exponent must be an integer")
    if k < 0:
        a, k = series_inverse(a), -k
    result = unit_series(a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def sinc_half(order: int) -> EvenSeries:
    """sin(u/2)/(u/2): coefficient of u^(2g) is (-1)^g / ((2g+1)! 4^g)."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    return EvenSeries(Fraction((-1) ** g, factorial(2 * g + 1) * 4**g) for g in range(order + 1))


def sinc_scaled(d: int, order: int) -> EvenSeries:
    """sin(d*u/2)/(u/2), the multiple-cover kernel base; constant term d."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return sinc_half(order).substitute_scaled(d).scale(d)


def sin_u_over_u(order: int) -> EvenSeries:
    """sin(u)/u: coefficient of u^(2g) is (-1)^g / (2g+1)!."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    return EvenSeries(Fraction((-1) ** g, factorial(2 * g + 1)) for g in range(order + 1))
