"""Exact rationals and their text encoding.

``Rat`` is :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, backed by arbitrary-precision integers.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import DomainError

Rat = Fraction

_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


def to_rat(value) -> Fraction:
    """Coerce an int, Fraction or rational string to ``Rat``; floats are rejected."""
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-2"``, ``"1/3"`` or ``"-7/2"``.

    Decimal points, exponents, whitespace and zero denominators are rejected.
    """
    if not isinstance(text, str) or _RATIONAL_RE.fullmatch(text) is None:
        raise DomainError(f"invalid rational string: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DomainError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))
