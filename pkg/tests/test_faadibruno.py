import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fdbseries import (
    DomainError,
    OutOfRangeError,
    TruncatedSeries,
    WeightFunction,
    derivative_via_series,
    fdb_terms,
    nth_derivative_composite,
    oracle_composition_weight,
)

from oracles import partitions_by_sorting, poly_compose, poly_derivative_at, set_partition_count

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=9)


def test_terms_n3():
    terms = fdb_terms(3)
    assert [t.b for t in terms] == [(0, 0, 1), (1, 1, 0), (3, 0, 0)]
    assert [t.coeff for t in terms] == [6, 6, 1]
    assert [t.r for t in terms] == [1, 2, 3]
    # divided by prod (i!)^b_i: G'F''' + 3 G''F'F'' + G'''(F')^3
    reduced = [t.coeff // math.prod(math.factorial(i) ** b for i, b in enumerate(t.b, 1)) for t in terms]
    assert reduced == [1, 3, 1]


def test_terms_n1():
    (t,) = fdb_terms(1)
    assert (t.b, t.coeff, t.r) == ((1,), 1, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_terms_count_and_positivity(n):
    terms = fdb_terms(n)
    assert len(terms) == len(partitions_by_sorting(n))
    for t in terms:
        assert isinstance(t.coeff, int) and t.coeff > 0
        assert sum(i * b for i, b in enumerate(t.b, 1)) == n
        assert t.r == sum(t.b)


def test_terms_domain():
    with pytest.raises(DomainError):
        fdb_terms(0)


def test_chain_rule():
    assert nth_derivative_composite(1, [Fraction(2, 3)], [5]) == Fraction(10, 3)


def test_third_derivative_structure():
    # tags: F' = 2, F'' = 3, F''' = 5, G' = 7, G'' = 11, G''' = 13
    got = nth_derivative_composite(3, [2, 3, 5], [7, 11, 13])
    assert got == 7 * 5 + 3 * 11 * 2 * 3 + 13 * 2**3


def test_x_squared_cubed():
    # F = x^2, G = y^3 at x = 1; G(F(x)) = x^6 and d^4 x^6 = 360 x^2
    assert nth_derivative_composite(4, [2, 2, 0, 0], [3, 6, 6, 0]) == 360


def test_short_tables():
    with pytest.raises(DomainError):
        nth_derivative_composite(3, [1, 2], [1, 2, 3])


@pytest.mark.parametrize("n", range(1, 8))
def test_bell_numbers(n):
    bell = set_partition_count(n)
    assert nth_derivative_composite(n, [1] * n, [1] * n) == bell
    f = WeightFunction.from_callable(lambda i: Fraction(1, math.factorial(i)), n)
    g = WeightFunction.from_callable(lambda r: Fraction(1, math.factorial(r)), n)
    assert math.factorial(n) * oracle_composition_weight(n, f, g) == bell


def test_via_series_identity_outer():
    f = TruncatedSeries([0, 3, Fraction(1, 2), -4, 9])
    g = TruncatedSeries.identity(4)
    for n in range(1, 5):
        assert derivative_via_series(g, f, n) == math.factorial(n) * f.coefficient(n)


def test_via_series_matches_direct_n3():
    s = TruncatedSeries([0, 1, 1, 1])
    assert derivative_via_series(s, s, 3) == nth_derivative_composite(3, [1, 2, 6], [1, 2, 6])


def test_exp_sin_fourth_derivative():
    sin_derivs = [0, 1, 0, -1, 0, 1, 0]
    exp_derivs = [1] * 7
    f = TruncatedSeries.from_derivatives(sin_derivs)
    g = TruncatedSeries.from_derivatives(exp_derivs)
    got = derivative_via_series(g, f, 4)
    assert got == nth_derivative_composite(4, sin_derivs[1:], exp_derivs[1:])
    assert got == -3  # 4! * (-1/8)


def test_via_series_out_of_range():
    with pytest.raises(OutOfRangeError):
        derivative_via_series(TruncatedSeries([0, 1]), TruncatedSeries([0, 1]), 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=9, max_size=9), st.lists(rationals, min_size=9, max_size=9))
def test_path_equivalence_at_zero(fc, gc):
    fc[0] = Fraction(0)
    F, G = TruncatedSeries(fc), TruncatedSeries(gc)
    fd = [math.factorial(i) * fc[i] for i in range(1, 9)]
    gd = [math.factorial(i) * gc[i] for i in range(1, 9)]
    for n in range(1, 9):
        assert derivative_via_series(G, F, n) == nth_derivative_composite(n, fd, gd)


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=4), st.lists(rationals, min_size=1, max_size=4), rationals)
def test_general_point_polynomials(fc, gc, x0):
    composite = poly_compose(gc, fc)
    fd = [poly_derivative_at(fc, x0, i) for i in range(1, 7)]
    y0 = poly_derivative_at(fc, x0, 0)
    gd = [poly_derivative_at(gc, y0, r) for r in range(1, 7)]
    for n in range(1, 7):
        assert nth_derivative_composite(n, fd, gd) == poly_derivative_at(composite, x0, n)
