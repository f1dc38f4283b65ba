"""Exact integer and rational arithmetic.

Integers are Python ints (arbitrary precision). Rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator, so equality of two rationals is equality of their
canonical forms.
"""

import math
import re
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

__all__ = [
    "Rational",
    "DomainError",
    "DivisionByZero",
    "factorial",
    "superfactorial",
    "binomial",
    "div",
    "as_rational",
    "parse_rational",
    "render_rational",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class DivisionByZero(ZeroDivisionError):
    """Division of a rational by zero.

    ``context`` carries whatever the caller knows about where the zero
    came from (for example the shifted parameters of a recurrence).
    """

    def __init__(self, message="division by zero", context=None):
        super().__init__(message)
        self.context = context


def _check_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")


def factorial(n):
    """Return n! = 1*2*...*n, with 0! = 1."""
    _check_int("n", n)
    if n < 0:
        raise DomainError(f"factorial undefined for negative n={n}")
    return math.factorial(n)


@lru_cache(maxsize=None)
def _superfactorial(n):
    product = 1
    fact = 1
    for k in range(1, n + 1):
        fact *= k
        product *= fact
    return product


def superfactorial(n):
    """Return 1!*2!*...*n!.

    Both ``superfactorial(0)`` and ``superfactorial(-1)`` are empty
    products equal to 1; anything below -1 is rejected.
    """
    _check_int("n", n)
    if n < -1:
        raise DomainError(f"superfactorial undefined for n={n} < -1")
    return _superfactorial(max(n, 0))


def binomial(m, k):
    """Return C(m, k) for m >= 0, and 0 when k < 0 or k > m."""
    _check_int("m", m)
    _check_int("k", k)
    if m < 0:
        raise DomainError(f"binomial needs a nonnegative upper argument, got m={m}")
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise TypeError(f"cannot make an exact rational from {x!r}")
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def div(x, y, context=None):
    """Exact quotient x / y, raising :class:`DivisionByZero` if y == 0."""
    y = as_rational(y)
    if y == 0:
        raise DivisionByZero(f"cannot divide {render_rational(as_rational(x))} by zero", context)
    return as_rational(x) / y


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:/(\d+))?\s*")


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"`` (q a positive decimal) into a canonical rational."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not an integer or p/q rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DivisionByZero(f"zero denominator in {text.strip()!r}")
    return Fraction(num, den)


def render_rational(x):
    """Render as ``"p"`` when the denominator is 1, else ``"p/q"``."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
