from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fdbseries import DomainError, format_rational, parse_rational
from fdbseries.rational import to_rat


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)),
    ("-2", Fraction(-2)),
    ("1/3", Fraction(1, 3)),
    ("-7/2", Fraction(-7, 2)),
    ("+4/6", Fraction(2, 3)),
    ("0/5", Fraction(0)),
])
def test_parse_valid(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "", " 1", "1/-2", "1e3", "a", "1//2"])
def test_parse_invalid(text):
    with pytest.raises(DomainError):
        parse_rational(text)


def test_to_rat_rejects_floats_and_bools():
    for bad in (0.5, True, None):
        with pytest.raises(DomainError):
            to_rat(bad)


def test_lowest_terms_and_zero():
    x = parse_rational("-6/4")
    assert (x.numerator, x.denominator) == (-3, 2)
    z = parse_rational("0/7")
    assert (z.numerator, z.denominator) == (0, 1)


@given(st.fractions())
def test_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_third_times_three_is_exact():
    assert parse_rational("1/3") * 3 == 1
