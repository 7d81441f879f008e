from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from germkit.errors import ParseError
from germkit.scalars import I, ONE, Scalar, ZERO, format_scalar, parse_scalar, scalar

fractions_st = st.fractions(min_value=-6, max_value=6, max_denominator=12)
scalars_st = st.builds(Scalar, fractions_st, fractions_st)
rationals_st = st.builds(Scalar, fractions_st)


def test_basic_examples():
    assert scalar("1/2") + scalar("1/3") == scalar("5/6")
    assert I * I == -ONE
    assert (scalar(2) + scalar("3*i")).conjugate() == scalar("2-3*i")


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_rational_inputs_stay_rational():
    a, b = scalar("3/7"), scalar("-14/9")
    for value in (a + b, a * b, a / b, a - b):
        assert value.is_rational()


@given(scalars_st, scalars_st, scalars_st)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a + (-a) == ZERO


@given(scalars_st)
def test_multiplicative_inverse(a):
    if a:
        assert a * (ONE / a) == ONE


@given(scalars_st, scalars_st)
def test_conjugation_is_a_ring_map(a, b):
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


@given(scalars_st)
def test_string_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0", ZERO),
        ("-7/3", Scalar(Fraction(-7, 3))),
        ("i", I),
        ("-i", -I),
        ("2*i", Scalar(Fraction(0), Fraction(2))),
        ("1/2+1/3*i", Scalar(Fraction(1, 2), Fraction(1, 3))),
        ("1/2-1/3*i", Scalar(Fraction(1, 2), Fraction(-1, 3))),
        ("-1/2+i", Scalar(Fraction(-1, 2), Fraction(1))),
    ],
)
def test_parse_forms(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "x", "1//2", "1+2", "1/0"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_powers():
    x = scalar("2/3")
    assert x**3 == scalar("8/27")
    assert x**0 == ONE
    assert x**-1 == scalar("3/2")
    assert I**2 == -ONE
