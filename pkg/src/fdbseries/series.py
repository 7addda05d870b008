"""Truncated formal power series over exact rationals.

A series of precision ``N`` is known modulo ``x**(N+1)``. Coefficients past
``N`` are unknown rather than zero, so binary operations take the smaller
precision of their operands and never pad.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from ._backend import kernels
from .errors import CompositionDomainError, DomainError, OutOfRangeError
from .rational import to_rat


def _scaled(coeffs):
    # integer numerators over a common denominator
    den = math.lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = tuple(to_rat(c) for c in coeffs)
        if not coeffs:
            raise DomainError("a truncated series needs at least one coefficient")
        self.coeffs = coeffs

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coefficients(cls, coeffs: Sequence) -> "TruncatedSeries":
        return cls(coeffs)

    @classmethod
    def from_derivatives(cls, derivs: Sequence) -> "TruncatedSeries":
        """Series with ``c_n = derivs[n] / n!`` (``derivs[0]`` is the value at 0)."""
        if not derivs:
            raise DomainError("a truncated series needs at least one coefficient")
        return cls(to_rat(d) / math.factorial(n) for n, d in enumerate(derivs))

    @classmethod
    def from_polynomial(cls, coeffs: Sequence, precision: int) -> "TruncatedSeries":
        """A polynomial viewed as a series: coefficients past its degree are exact zeros."""
        coeffs = list(coeffs)
        if not coeffs or precision < 0:
            raise DomainError("need a nonempty coefficient list and precision >= 0")
        coeffs = coeffs[: precision + 1] + [0] * (precision + 1 - len(coeffs))
        return cls(coeffs)

    @classmethod
    def constant(cls, value, precision: int) -> "TruncatedSeries":
        return cls.from_polynomial([value], precision)

    @classmethod
    def identity(cls, precision: int) -> "TruncatedSeries":
        return cls.from_polynomial([0, 1], precision)

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision < 0 or precision > self.precision:
            raise OutOfRangeError(f"cannot truncate precision {self.precision} to {precision}")
        return TruncatedSeries(self.coeffs[: precision + 1])

    def coefficient(self, n: int) -> Fraction:
        if n < 0 or n > self.precision:
            raise OutOfRangeError(
                f"coefficient {n} is unknown for a series of precision {self.precision}"
            )
        return self.coeffs[n]

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, k):
        return pow(self, k)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def from_coefficients(coeffs: Sequence) -> TruncatedSeries:
    return TruncatedSeries.from_coefficients(coeffs)


def from_derivatives(derivs: Sequence) -> TruncatedSeries:
    return TruncatedSeries.from_derivatives(derivs)


def coefficient(a: TruncatedSeries, n: int) -> Fraction:
    return a.coefficient(n)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    m = min(a.precision, b.precision)
    return TruncatedSeries([x + y for x, y in zip(a.coeffs[: m + 1], b.coeffs[: m + 1])])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller precision."""
    length = min(a.precision, b.precision) + 1
    ai, ad = _scaled(a.coeffs[:length])
    bi, bd = _scaled(b.coeffs[:length])
    den = ad * bd
    return TruncatedSeries([Fraction(c, den) for c in kernels.convolve(ai, bi, length)])


def pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise DomainError(f"series powers need an integer k >= 0, got {k!r}")
    result = TruncatedSeries.constant(1, a.precision)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def compose(g: TruncatedSeries, f: TruncatedSeries) -> TruncatedSeries:
    """``G(F(x))`` for ``F`` without constant term, evaluated by Horner's scheme.

    Coefficient ``n >= 1`` of the result is the total weight of the compositions
    of ``n`` with part weights ``f_i`` and part-count weights ``g_k``; ``g_0``
    only reaches the constant coefficient.
    """
    if f.coeffs[0] != 0:
        raise CompositionDomainError(
            f"composition G(F(x)) requires f_0 = 0 (parts are positive integers), "
            f"got f_0 = {f.coeffs[0]}"
        )
    n = min(g.precision, f.precision)
    f = f.truncate(n)
    result = TruncatedSeries.constant(g.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        result = mul(result, f)
        result = TruncatedSeries((result.coeffs[0] + g.coeffs[k],) + result.coeffs[1:])
    return result
