from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dodgson.arith import (
    DivisionByZero,
    DomainError,
    binomial,
    div,
    factorial,
    parse_rational,
    render_rational,
    superfactorial,
)


def product(xs):
    p = 1
    for x in xs:
        p *= x
    return p


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected
    assert product(range(1, n + 1)) == expected


def test_factorial_recurrence():
    for n in range(1, 51):
        assert factorial(n) == n * factorial(n - 1)


@pytest.mark.parametrize("bad", [-1, -7])
def test_factorial_negative(bad):
    with pytest.raises(DomainError):
        factorial(bad)


def test_factorial_rejects_non_integers():
    with pytest.raises(DomainError):
        factorial(2.0)
    with pytest.raises(DomainError):
        factorial(True)


@pytest.mark.parametrize("n, expected", [(-1, 1), (0, 1), (3, 12), (4, 288)])
def test_superfactorial_examples(n, expected):
    assert superfactorial(n) == expected


def test_superfactorial_matches_product_of_factorials():
    for n in range(0, 31):
        assert superfactorial(n) == product(product(range(1, k + 1)) for k in range(1, n + 1))


def test_superfactorial_ratio_is_factorial():
    for n in range(0, 31):
        assert superfactorial(n) == factorial(n) * superfactorial(n - 1)


def test_superfactorial_below_minus_one():
    with pytest.raises(DomainError):
        superfactorial(-2)


@pytest.mark.parametrize("m, k, expected", [(4, 2, 6), (2, 3, 0), (7, 0, 1), (3, -1, 0)])
def test_binomial_examples(m, k, expected):
    assert binomial(m, k) == expected


def test_binomial_pascal():
    for m in range(1, 31):
        for k in range(0, m + 1):
            assert binomial(m, k) == binomial(m - 1, k - 1) + binomial(m - 1, k)


def test_binomial_against_factorials():
    for m in range(0, 20):
        for k in range(0, m + 1):
            assert binomial(m, k) * factorial(k) * factorial(m - k) == factorial(m)


def test_binomial_negative_upper():
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_rational_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert parse_rational("2/4") == Fraction(1, 2)
    assert render_rational(parse_rational("2/4")) == "1/2"
    with pytest.raises(DivisionByZero):
        div(Fraction(3, 5), Fraction(0, 1))


def test_division_by_zero_is_a_zero_division_error():
    with pytest.raises(ZeroDivisionError):
        div(1, 0)


def test_division_by_zero_carries_context():
    with pytest.raises(DivisionByZero) as info:
        div(1, 0, context=(0, 1, 2))
    assert info.value.context == (0, 1, 2)


@pytest.mark.parametrize("text, value", [
    ("7", Fraction(7)),
    ("  -3/9\t", Fraction(-1, 3)),
    ("+5/1", Fraction(5)),
    ("0/4", Fraction(0)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "1/-2", "a", "1/2/3", "1e3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_zero_denominator():
    with pytest.raises(DivisionByZero):
        parse_rational("1/0")


def test_render_forms():
    assert render_rational(Fraction(-6, 4)) == "-3/2"
    assert render_rational(Fraction(10, 5)) == "2"
    assert render_rational(12345678901234567890123) == "12345678901234567890123"


@given(st.fractions())
def test_round_trip(x):
    assert parse_rational(render_rational(x)) == x


@given(st.fractions().filter(lambda x: x != 0))
def test_multiplicative_inverse(x):
    assert x * div(1, x) == 1


@given(st.fractions())
def test_canonical_form(x):
    from math import gcd
    assert x.denominator > 0
    assert gcd(abs(x.numerator), x.denominator) == 1


@given(st.integers())
def test_integer_round_trip(n):
    assert parse_rational(str(n)) == n
