from fractions import Fraction

import pytest

from minproj.errors import InputFormatError
from minproj.rational import (approx_decimal, format_rational, format_vector,
                              parse_rational, parse_vector)


def test_parse_ints_and_strings():
    assert parse_rational(3) == Fraction(3)
    assert parse_rational(-2) == Fraction(-2)
    assert parse_rational("7") == Fraction(7)
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("+4/2") == Fraction(2)
    assert parse_rational(" 5/3 ") == Fraction(5, 3)
    assert parse_rational(Fraction(9, 4)) == Fraction(9, 4)


@pytest.mark.parametrize("bad", [
    1.5, True, False, "1.5", "1e3", "3/0", "a/b", "1/2/3", "", None, [1],
])
def test_parse_rejects(bad):
    with pytest.raises(InputFormatError):
        parse_rational(bad)


def test_format_round_trip():
    for p in range(-12, 13):
        for q in range(1, 9):
            x = Fraction(p, q)
            assert parse_rational(format_rational(x)) == x
    assert format_rational(Fraction(4)) == "4"
    assert format_rational(Fraction(-3, 2)) == "-3/2"


def test_approx_decimal_significant_digits():
    assert approx_decimal(Fraction(4, 3)) == "1.33333333333"
    assert approx_decimal(Fraction(1, 3)) == "0.333333333333"
    assert approx_decimal(Fraction(2)) == "2"
    assert approx_decimal(Fraction(-8, 5)) == "-1.6"
    assert approx_decimal(Fraction(1, 7), significant_digits=5) == "0.14286"


def test_vectors():
    assert parse_vector(["1/2", 3, "-1"]) == (Fraction(1, 2), Fraction(3), Fraction(-1))
    assert format_vector((Fraction(1, 2), Fraction(2))) == ["1/2", "2"]
    with pytest.raises(InputFormatError):
        parse_vector(["1/2"], length=2)
    with pytest.raises(InputFormatError):
        parse_vector("not-a-list")
