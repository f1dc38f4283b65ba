"""MacMahon's binomial determinant and the condensation recurrence behind it.

For integers a >= b >= 0 and n >= 0 let

    L_n(a, b) = det[ C(a+i, b+j) ]_{1 <= i, j <= n}
    R_n(a, b) = (a+n)!! (n-1)!! (a-b-1)!! b!! / (a!! (a-b+n-1)!! (b+n)!!)

with m!! = 1! 2! ... m! the superfactorial.  Both satisfy

    X_n(a,b) X_{n-2}(a+1,b+1)
        = X_{n-1}(a,b) X_{n-1}(a+1,b+1) - X_{n-1}(a+1,b) X_{n-1}(a,b+1)

and agree for n = 0, 1, hence everywhere.  This module evaluates both
sides and checks the identity and the recurrence on finite grids.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import DivisionByZero, DomainError, binomial, render_rational, superfactorial
from .condense import Strategy, det
from .matrix import Matrix

__all__ = [
    "MacMahonParams",
    "Counterexample",
    "VerificationReport",
    "binomial_matrix",
    "macmahon_closed_form",
    "determinant_side",
    "closed_form_side",
    "recurrence_rhs",
    "verify_identity",
    "verify_recurrence",
    "verify_bhp",
    "bhp_value",
]


def _check_nonneg_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be nonnegative, got {value}")


@dataclass(frozen=True)
class MacMahonParams:
    n: int
    a: int
    b: int

    def __post_init__(self):
        _check_nonneg_int("n", self.n)
        _check_nonneg_int("a", self.a)
        _check_nonneg_int("b", self.b)
        if self.a < self.b:
            raise DomainError(f"need a >= b, got a={self.a} < b={self.b}")

    def as_tuple(self):
        return (self.n, self.a, self.b)


def _binomial_grid(n, a, b):
    return [[binomial(a + i, b + j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def binomial_matrix(p):
    """The n x n matrix with (i, j) entry C(a+i, b+j)."""
    return Matrix(_binomial_grid(p.n, p.a, p.b))


def macmahon_closed_form(p):
    """R_n(a, b) as an exact rational (always a positive integer)."""
    if not isinstance(p, MacMahonParams):
        raise TypeError("macmahon_closed_form expects MacMahonParams")
    n, a, b = p.n, p.a, p.b
    sf = superfactorial
    num = sf(a + n) * sf(n - 1) * sf(a - b - 1) * sf(b)
    den = sf(a) * sf(a - b + n - 1) * sf(b + n)
    return Fraction(num, den)


def determinant_side(n, a, b, strategy=Strategy.CONDENSATION_FALLBACK):
    """L_n(a, b) for any n, a, b >= 0 (a < b allowed; the matrix is still defined)."""
    return det(Matrix(_binomial_grid(n, a, b)), strategy).value


def closed_form_side(n, a, b):
    """R_n(a, b), extended by one step past the diagonal to b = a + 1.

    The recurrence at a = b needs X_{n-1}(a, a+1).  There (a-b-1)!! would be
    (-2)!!, which the analytic continuation of the superfactorial (Barnes G
    at 0) sends to 0; the binomial matrix is strictly lower triangular, so
    both sides are 0 for n >= 1 and 1 for n = 0.
    """
    if b == a + 1 and a >= 0:
        return Fraction(int(n == 0))
    return macmahon_closed_form(MacMahonParams(n, a, b))


def recurrence_rhs(p, f):
    """Right-hand side of the condensation recurrence, driven by evaluator f(n, a, b)."""
    n, a, b = p.n, p.a, p.b
    if n < 2:
        raise DomainError(f"the recurrence needs n >= 2, got n={n}")
    denom = f(n - 2, a + 1, b + 1)
    if denom == 0:
        raise DivisionByZero(
            f"X_{n - 2}({a + 1},{b + 1}) = 0", context=(n - 2, a + 1, b + 1)
        )
    top = f(n - 1, a, b) * f(n - 1, a + 1, b + 1) - f(n - 1, a + 1, b) * f(n - 1, a, b + 1)
    return Fraction(top) / denom


@dataclass(frozen=True)
class Counterexample:
    params: tuple
    lhs: Fraction
    rhs: Fraction

    def to_dict(self):
        n, a, b = self.params
        return {
            "params": {"n": n, "a": a, "b": b},
            "lhs": render_rational(self.lhs),
            "rhs": render_rational(self.rhs),
        }


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    grid: dict
    grid_size: int
    cases_checked: int
    counterexample: Counterexample = None
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.counterexample is None and self.cases_checked != self.grid_size:
            raise ValueError("a report without a counterexample must cover the whole grid")

    @property
    def ok(self):
        return self.counterexample is None

    def to_dict(self):
        return {
            "kind": self.kind,
            "grid": {k: list(v) for k, v in self.grid.items()},
            "grid_size": self.grid_size,
            "cases_checked": self.cases_checked,
            "ok": self.ok,
            "counterexample": None if self.ok else self.counterexample.to_dict(),
            "elapsed_seconds": self.elapsed,
        }


def _grid(n_lo, n_max, a_max, b_max):
    if b_max is None:
        b_max = a_max
    for n in range(n_lo, n_max + 1):
        for a in range(a_max + 1):
            for b in range(min(a, b_max) + 1):
                yield n, a, b


def _run(kind, points, grid, check):
    t0 = time.perf_counter()
    points = list(points)
    checked = 0
    bad = None
    for pt in points:
        checked += 1
        lhs, rhs = check(*pt)
        if lhs != rhs:
            bad = Counterexample(pt, Fraction(lhs), Fraction(rhs))
            break
    return VerificationReport(kind, grid, len(points), checked, bad, time.perf_counter() - t0)


def _bounds(n_lo, n_max, a_max, b_max):
    for name, v in (("n_max", n_max), ("a_max", a_max)):
        _check_nonneg_int(name, v)
    if b_max is not None:
        _check_nonneg_int("b_max", b_max)
    b_top = a_max if b_max is None else min(a_max, b_max)
    return {"n": (n_lo, n_max), "a": (0, a_max), "b": (0, b_top)}


def verify_identity(n_max, a_max, b_max=None):
    """Compare L_n(a, b) with R_n(a, b) for 0 <= n <= n_max, 0 <= b <= a <= a_max."""
    grid = _bounds(0, n_max, a_max, b_max)

    def check(n, a, b):
        p = MacMahonParams(n, a, b)
        return det(binomial_matrix(p), Strategy.CONDENSATION_FALLBACK).value, macmahon_closed_form(p)

    return _run("identity", _grid(0, n_max, a_max, b_max), grid, check)


def verify_recurrence(n_max, a_max, which, b_max=None):
    """Check the division-free recurrence for X = L or X = R on 2 <= n <= n_max."""
    if which not in ("L", "R"):
        raise DomainError(f"which must be 'L' or 'R', got {which!r}")
    _check_nonneg_int("n_max", n_max)
    if n_max < 2:
        raise DomainError(f"the recurrence needs n_max >= 2, got {n_max}")
    grid = _bounds(2, n_max, a_max, b_max)
    evaluator = determinant_side if which == "L" else closed_form_side
    cache = {}

    def f(n, a, b):
        key = (n, a, b)
        if key not in cache:
            cache[key] = evaluator(n, a, b)
        return cache[key]

    def check(n, a, b):
        lhs = f(n, a, b) * f(n - 2, a + 1, b + 1)
        rhs = f(n - 1, a, b) * f(n - 1, a + 1, b + 1) - f(n - 1, a + 1, b) * f(n - 1, a, b + 1)
        return lhs, rhs

    return _run(f"recurrence-{which}", _grid(2, n_max, a_max, b_max), grid, check)


def _bhp_sides(n):
    p = MacMahonParams(n, 2 * n + 1, n)
    return macmahon_closed_form(p), det(binomial_matrix(p), Strategy.CONDENSATION_FALLBACK).value


def bhp_value(n):
    """R_n(2n+1, n), checked against the determinant it evaluates."""
    _check_nonneg_int("n", n)
    if n < 1:
        raise DomainError(f"bhp_value needs n >= 1, got {n}")
    closed, determinant = _bhp_sides(n)
    if closed != determinant:
        raise AssertionError(
            f"closed form {render_rational(closed)} != determinant {render_rational(determinant)} at n={n}"
        )
    return closed


def verify_bhp(n_max):
    """Check closed form against determinant at a = 2n+1, b = n for 1 <= n <= n_max."""
    _check_nonneg_int("n_max", n_max)
    grid = {"n": (1, n_max)}
    points = [(n, 2 * n + 1, n) for n in range(1, n_max + 1)]
    return _run("bhp", points, grid, lambda n, a, b: _bhp_sides(n))
