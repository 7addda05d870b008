"""Randomised equivalence battery: closed forms against independent routes.

Draws are small rationals (numerators in [-9, 9], denominators in [1, 9])
from a seeded generator, so a run is fully reproducible.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from . import combinatorics as comb
from . import faadibruno as fdb
from .rational import format_rational
from .series import TruncatedSeries, add, compose, mul

MAX_PATH_N = 8
MAX_GENERAL_X_N = 6
MAX_POLY_DEGREE = 8


@dataclass
class CheckResult:
    name: str
    checks: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def random_rat(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_weights(rng: random.Random, n: int) -> comb.WeightFunction:
    return comb.WeightFunction({i: random_rat(rng) for i in range(1, n + 1)}, random_rat(rng))


def random_poly(rng: random.Random, degree: int, constant: bool = True) -> list:
    coeffs = [random_rat(rng) for _ in range(degree + 1)]
    if not constant:
        coeffs[0] = Fraction(0)
    return coeffs


def weight_spec_json(w: comb.WeightFunction) -> str:
    return json.dumps(
        {
            "default": format_rational(w.default),
            "values": {str(k): format_rational(v) for k, v in sorted(w.overrides.items())},
        },
        separators=(",", ":"),
    )


def series_json(coeffs) -> str:
    return json.dumps([format_rational(c) for c in coeffs], separators=(",", ":"))


def poly_derivatives(coeffs, x0: Fraction, upto: int) -> list:
    """``[p(x0), p'(x0), ..., p^(upto)(x0)]`` by repeated term-wise differentiation."""
    out = []
    cur = list(coeffs)
    for _ in range(upto + 1):
        out.append(sum((c * x0**i for i, c in enumerate(cur)), Fraction(0)))
        cur = [i * c for i, c in enumerate(cur)][1:] or [Fraction(0)]
    return out


def expand_composite(g_coeffs, f_coeffs) -> list:
    """Coefficients of the polynomial G(F(x)), expanded exactly (F may have a constant term)."""
    degree = (len(g_coeffs) - 1) * (len(f_coeffs) - 1)
    f = TruncatedSeries.from_polynomial(f_coeffs, degree)
    result = TruncatedSeries.constant(g_coeffs[-1], degree)
    for c in reversed(g_coeffs[:-1]):
        result = add(mul(result, f), TruncatedSeries.constant(c, degree))
    return list(result.coeffs)


def _check_eq4_vs_oracle(max_n, trials, rng):
    checks = 0
    for n in range(1, max_n + 1):
        for trial in range(trials):
            f, g = random_weights(rng, n), random_weights(rng, n)
            closed = comb.weighted_composition_weight_g(n, f, g)
            brute = comb.oracle_composition_weight(n, f, g)
            checks += 1
            if closed != brute:
                return checks, (
                    f"n={n} trial={trial} f={weight_spec_json(f)} g={weight_spec_json(g)} "
                    f"closed_form={closed} oracle={brute}"
                )
    return checks, None


def _check_coefficient_bridge(max_n, trials, rng):
    checks = 0
    degree = min(MAX_POLY_DEGREE, max_n)
    for trial in range(trials):
        fc = random_poly(rng, degree, constant=False)
        gc = random_poly(rng, degree)
        G = TruncatedSeries.from_polynomial(gc, max_n)
        F = TruncatedSeries.from_polynomial(fc, max_n)
        C = compose(G, F)
        fw = comb.WeightFunction.from_sequence(fc)
        gw = comb.WeightFunction.from_sequence(gc)
        for n in range(1, max_n + 1):
            closed = comb.weighted_composition_weight_g(n, fw, gw)
            checks += 1
            if C.coefficient(n) != closed:
                return checks, (
                    f"n={n} trial={trial} F={series_json(fc)} G={series_json(gc)} "
                    f"series={C.coefficient(n)} closed_form={closed}"
                )
    return checks, None


def _check_path_equivalence(max_n, trials, rng):
    checks = 0
    top = min(max_n, MAX_PATH_N)
    for trial in range(trials):
        fc = random_poly(rng, top, constant=False)
        gc = random_poly(rng, top)
        F = TruncatedSeries(fc)
        G = TruncatedSeries(gc)
        f_derivs = [math.factorial(i) * fc[i] for i in range(1, top + 1)]
        g_derivs = [math.factorial(i) * gc[i] for i in range(1, top + 1)]
        for n in range(1, top + 1):
            via_series = fdb.derivative_via_series(G, F, n)
            direct = fdb.nth_derivative_composite(n, f_derivs, g_derivs)
            checks += 1
            if via_series != direct:
                return checks, (
                    f"n={n} trial={trial} F={series_json(fc)} G={series_json(gc)} "
                    f"series={via_series} faa_di_bruno={direct}"
                )
    return checks, None


def _check_general_x(max_n, trials, rng):
    checks = 0
    top = min(max_n, MAX_GENERAL_X_N)
    for trial in range(trials):
        fc = random_poly(rng, rng.randint(1, 4))
        gc = random_poly(rng, rng.randint(1, 4))
        x0 = random_rat(rng)
        fd = poly_derivatives(fc, x0, top)
        gd = poly_derivatives(gc, fd[0], top)
        expanded = poly_derivatives(expand_composite(gc, fc), x0, top)
        for n in range(1, top + 1):
            direct = fdb.nth_derivative_composite(n, fd[1:], gd[1:])
            checks += 1
            if direct != expanded[n]:
                return checks, (
                    f"n={n} trial={trial} F={series_json(fc)} G={series_json(gc)} x0={x0} "
                    f"faa_di_bruno={direct} expanded={expanded[n]}"
                )
    return checks, None


CHECKS: List[tuple] = [
    ("eq4-vs-oracle", _check_eq4_vs_oracle),
    ("coefficient-bridge", _check_coefficient_bridge),
    ("path-equivalence", _check_path_equivalence),
    ("general-x-polynomial", _check_general_x),
]


def run_battery(max_n: int, trials: int, seed: int,
                checks: Optional[List[tuple]] = None) -> List[CheckResult]:
    results = []
    for name, fn in checks or CHECKS:
        rng = random.Random(f"{seed}:{name}")
        count, counterexample = fn(max_n, trials, rng)
        results.append(CheckResult(name, count, counterexample))
    return results
