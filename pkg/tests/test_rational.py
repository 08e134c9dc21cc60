from fractions import Fraction

import pytest

from dualdeg.rational import common_denominator, fmt, parse


def test_parse_fraction_and_integer():
    assert parse("3/6") == Fraction(1, 2)
    assert parse("-4") == -4
    assert parse(Fraction(2, 3)) == Fraction(2, 3)


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1/0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse(bad)


def test_fmt_always_has_denominator():
    assert fmt(3) == "3/1"
    assert fmt(Fraction(-2, 4)) == "-1/2"
    assert parse(fmt(Fraction(7, 9))) == Fraction(7, 9)


def test_common_denominator():
    assert common_denominator([Fraction(1, 4), Fraction(1, 6), 2]) == 12
