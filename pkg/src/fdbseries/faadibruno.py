"""Faà di Bruno's formula for the n-th derivative of G(F(x)).

Derivative values are passed as tables. ``f_derivs[i - 1]`` holds ``F^(i)(x)``
and ``g_derivs[r - 1]`` holds ``G^(r)(F(x))``; the plain values F(x) and
G(F(x)) never enter the formula and are not part of the tables.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .combinatorics import MultiplicityVector, _check_positive, enumerate_multiplicity_vectors
from .errors import DomainError
from .rational import to_rat
from .series import TruncatedSeries, compose


@dataclass(frozen=True)
class FdBTerm:
    """One summand: ``coeff * G^(r)(F) * prod (F^(i) / i!)**b_i``."""

    mult: MultiplicityVector
    coeff: int

    @property
    def b(self) -> tuple:
        return self.mult.multiplicities

    @property
    def r(self) -> int:
        return self.mult.r

    @property
    def n(self) -> int:
        return self.mult.n


def fdb_terms(n: int) -> List[FdBTerm]:
    _check_positive(n)
    nfact = math.factorial(n)
    terms = []
    for mv in enumerate_multiplicity_vectors(n):
        denom = math.prod(math.factorial(b) for b in mv.multiplicities)
        terms.append(FdBTerm(mv, nfact // denom))
    return terms


def nth_derivative_composite(n: int, f_derivs: Sequence, g_derivs: Sequence) -> Fraction:
    """Exact ``d^n/dx^n G(F(x))`` from derivative tables of F and G."""
    _check_positive(n)
    if len(f_derivs) < n or len(g_derivs) < n:
        raise DomainError(
            f"need {n} derivatives of F and G, got {len(f_derivs)} and {len(g_derivs)}"
        )
    # F^(i) / i!
    scaled = [to_rat(f_derivs[i - 1]) / math.factorial(i) for i in range(1, n + 1)]
    gd = [to_rat(v) for v in g_derivs[:n]]
    total = Fraction(0)
    for term in fdb_terms(n):
        prod = Fraction(term.coeff) * gd[term.r - 1]
        for i, b in enumerate(term.b):
            if b:
                prod *= scaled[i] ** b
        total += prod
    return total


def derivative_via_series(g: TruncatedSeries, f: TruncatedSeries, n: int) -> Fraction:
    """``n! * [x^n] G(F(x))``: the n-th derivative of G(F(x)) at 0."""
    _check_positive(n)
    return math.factorial(n) * compose(g, f).coefficient(n)
