from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from origamis.errors import DomainError, ParseError
from origamis.rationals import (
    Rational,
    arithmetic,
    format_rational,
    make_rational,
    parse_rational,
)


def test_make_rational_examples():
    assert make_rational(10, 9) == Fraction(10, 9)
    assert make_rational(-4, -6) == Fraction(2, 3)
    assert make_rational(0, 7) == Fraction(0, 1)


def test_zero_denominator():
    with pytest.raises(DomainError):
        make_rational(1, 0)


def test_arithmetic_examples():
    # add(2/9, 10/9) is the H(2) sum decomposition kappa + svc
    assert arithmetic(Rational(2, 9), Rational(10, 9), "add") == Rational(4, 3)
    assert arithmetic(Rational(1, 12), Rational(8, 3), "mul") == Rational(2, 9)
    assert arithmetic(Rational(3, 2), Rational(5, 4), "sub") == Rational(1, 4)
    assert arithmetic(Rational(1, 2), Rational(3, 4), "div") == Rational(2, 3)
    with pytest.raises(DomainError):
        arithmetic(Rational(1, 2), Rational(0), "div")
    with pytest.raises(DomainError):
        arithmetic(Rational(1), Rational(1), "pow")


def test_stored_reduced_and_normalized():
    r = make_rational(48, -36)
    assert (r.numerator, r.denominator) == (-4, 3)


def test_text_form():
    assert format_rational(Fraction(10, 9)) == "10/9"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 1)) == "4"
    assert format_rational(Fraction(0)) == "0"


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_rational("3/4/5")
    with pytest.raises(ParseError):
        parse_rational("1/0")


rationals = st.builds(
    Fraction,
    st.integers(min_value=-(2**70), max_value=2**70),
    st.integers(min_value=1, max_value=2**70),
)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(rationals)
def test_round_trip(r):
    assert parse_rational(format_rational(r)) == r


def test_no_overflow_at_128_bit_scale():
    a = make_rational(2**127 - 1, 2**126 + 1)
    b = make_rational(2**126 + 3, 2**127 - 5)
    prod = a * b
    assert prod * (1 / a) * (1 / b) == 1
