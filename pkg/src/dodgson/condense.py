"""Exact determinants: Dodgson condensation plus two independent oracles.

Condensation keeps two layers of connected minors.  Starting from the
order-0 layer (all ones, size n+1) and the order-1 layer (the matrix
itself), each step builds the order r+1 layer from

    D_{r+1}(k, l) = (D_r(k, l) D_r(k+1, l+1) - D_r(k, l+1) D_r(k+1, l))
                    / D_{r-1}(k+1, l+1)

where D_r(k, l) = det A_r(k, l).  After n - 1 steps a single entry, det A,
remains.  A zero divisor raises :class:`ZeroInteriorPivot`; the default
strategy then recomputes the determinant by Bareiss elimination on the
original matrix.
"""

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .arith import render_rational

__all__ = [
    "Strategy",
    "Algorithm",
    "FallbackEvent",
    "DetResult",
    "CondensationState",
    "ZeroInteriorPivot",
    "SizeError",
    "LAPLACE_MAX_N",
    "initial_state",
    "condense_step",
    "condensation_layers",
    "dodgson_det",
    "bareiss_det",
    "laplace_det",
    "det",
]

LAPLACE_MAX_N = 10

_ONE = Fraction(1)


class Strategy(enum.Enum):
    CONDENSATION_STRICT = "condensation-strict"
    CONDENSATION_FALLBACK = "condensation-fallback"
    BAREISS = "bareiss"
    LAPLACE = "laplace"


class Algorithm(enum.Enum):
    CONDENSATION = "condensation"
    CONDENSATION_WITH_FALLBACK = "condensation_with_fallback"
    BAREISS = "bareiss"
    LAPLACE = "laplace"


class ZeroInteriorPivot(ArithmeticError):
    """A divisor needed by a condensation step is zero.

    ``r`` is the order of the current layer (the step being attempted
    would produce order r+1) and ``position`` is the 1-based (k, l) of the
    zero entry in the order r-1 layer.
    """

    def __init__(self, r, position):
        super().__init__(
            f"zero interior pivot at layer r={r}, position {position} "
            f"(det A_{r - 1}{position} = 0)"
        )
        self.r = r
        self.position = position


class SizeError(ValueError):
    pass


@dataclass(frozen=True)
class FallbackEvent:
    layer: int
    position: tuple

    def to_dict(self):
        return {"layer": self.layer, "position": list(self.position)}


@dataclass(frozen=True)
class DetResult:
    value: Fraction
    algorithm: Algorithm
    fallback_events: tuple = ()
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.algorithm is Algorithm.CONDENSATION and self.fallback_events:
            raise ValueError("plain condensation cannot carry fallback events")

    def to_dict(self):
        return {
            "value": render_rational(self.value),
            "algorithm": self.algorithm.value,
            "fallback_events": [e.to_dict() for e in self.fallback_events],
            "elapsed_seconds": self.elapsed,
        }


@dataclass(frozen=True)
class CondensationState:
    """Two consecutive layers of connected minors.

    ``layer_prev`` holds det A_r(k, l) for all (n-r+1)^2 window positions,
    ``layer_prevprev`` the order r-1 minors, one larger in each dimension.
    Layers are 0-based tuple grids of Fractions.
    """

    layer_prev: tuple
    layer_prevprev: tuple
    r: int

    def __post_init__(self):
        if len(self.layer_prevprev) != len(self.layer_prev) + 1:
            raise ValueError("layer sizes must differ by exactly one")

    @property
    def size(self):
        return len(self.layer_prev)


def initial_state(M):
    """State at r = 1: the matrix itself over an all-ones order-0 layer."""
    if M.n == 0:
        raise ValueError("the empty matrix has no condensation layers")
    ones = tuple((_ONE,) * (M.n + 1) for _ in range(M.n + 1))
    return CondensationState(M.rows, ones, 1)


def _first_zero_divisor(Q, m):
    # divisors are Q[k+1][l+1] for 0 <= k, l < m-1, i.e. the interior of Q
    for k in range(1, m):
        row = Q[k]
        for l in range(1, m):
            if not row[l]:
                return (k + 1, l + 1)
    return None


def _condense_rows(P, Q, lo, hi):
    out = []
    m = len(P) - 1
    for k in range(lo, hi):
        top, bot, div = P[k], P[k + 1], Q[k + 1]
        out.append(tuple(
            (top[l] * bot[l + 1] - top[l + 1] * bot[l]) / div[l + 1]
            for l in range(m)
        ))
    return out


def _step(state, pool=None, chunks=1):
    P, Q = state.layer_prev, state.layer_prevprev
    m = len(P)
    if m < 2:
        raise ValueError("cannot condense a 1x1 layer further")
    bad = _first_zero_divisor(Q, m)
    if bad is not None:
        raise ZeroInteriorPivot(state.r, bad)
    rows = m - 1
    if pool is None or chunks <= 1 or rows < 2 * chunks:
        new = _condense_rows(P, Q, 0, rows)
    else:
        bounds = [rows * i // chunks for i in range(chunks + 1)]
        parts = pool.map(lambda i: _condense_rows(P, Q, bounds[i], bounds[i + 1]), range(chunks))
        new = [row for part in parts for row in part]
    return CondensationState(tuple(new), P, state.r + 1)


def condense_step(state, threads=1):
    """Apply one condensation step; rows may be split across ``threads`` workers.

    Raises ZeroInteriorPivot before any arithmetic if a divisor is zero, so
    the reported position is always the first zero in row-major order.
    """
    if threads <= 1:
        return _step(state)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return _step(state, pool, threads)


def condensation_layers(M, threads=1):
    """Yield every CondensationState from r = 1 up to the 1x1 layer."""
    state = initial_state(M)
    yield state
    if state.size < 2:
        return
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while state.size > 1:
            state = _step(state, pool, threads)
            yield state
    finally:
        if pool is not None:
            pool.shutdown()


def dodgson_det(M, threads=1):
    """Determinant by strict Dodgson condensation.

    Propagates ZeroInteriorPivot instead of guessing.
    """
    t0 = time.perf_counter()
    if M.n == 0:
        value = _ONE
    else:
        for state in condensation_layers(M, threads):
            pass
        value = state.layer_prev[0][0]
    return DetResult(value, Algorithm.CONDENSATION, (), time.perf_counter() - t0)


def _integer_rows(M):
    """Clear denominators row by row; returns (int grid, product of row scales)."""
    grid = []
    scale = 1
    for row in M.rows:
        d = lcm(*(x.denominator for x in row)) if row else 1
        grid.append([x.numerator * (d // x.denominator) for x in row])
        scale *= d
    return grid, scale


def bareiss_det(M):
    """Exact determinant by fraction-free elimination with row swaps."""
    n = M.n
    if n == 0:
        return _ONE
    a, scale = _integer_rows(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot_row = a[k]
        p = pivot_row[k]
        for i in range(k + 1, n):
            row = a[i]
            f = row[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * p - f * pivot_row[j]) // prev
            row[k] = 0
        prev = p
    return Fraction(sign * a[n - 1][n - 1], scale)


def laplace_det(M):
    """Determinant by cofactor expansion along the first remaining row.

    Minors are memoized on their column set, which keeps n = 10 tractable;
    larger inputs are refused.
    """
    n = M.n
    if n > LAPLACE_MAX_N:
        raise SizeError(f"laplace_det refuses n={n} > {LAPLACE_MAX_N}")
    rows = M.rows

    @lru_cache(maxsize=None)
    def minor(cols):
        i = n - len(cols)
        if not cols:
            return _ONE
        row = rows[i]
        total = Fraction(0)
        for pos, j in enumerate(cols):
            x = row[j]
            if x:
                term = x * minor(cols[:pos] + cols[pos + 1:])
                total = total - term if pos % 2 else total + term
        return total

    return minor(tuple(range(n)))


def det(M, strategy=Strategy.CONDENSATION_FALLBACK, threads=1):
    """Determinant of M under the given strategy, with provenance and timing."""
    strategy = Strategy(strategy)
    t0 = time.perf_counter()
    if strategy is Strategy.CONDENSATION_STRICT:
        return dodgson_det(M, threads)
    if strategy is Strategy.CONDENSATION_FALLBACK:
        try:
            return dodgson_det(M, threads)
        except ZeroInteriorPivot as exc:
            event = FallbackEvent(exc.r, exc.position)
            value = bareiss_det(M)
            return DetResult(value, Algorithm.CONDENSATION_WITH_FALLBACK, (event,), time.perf_counter() - t0)
    if strategy is Strategy.BAREISS:
        value = bareiss_det(M)
        return DetResult(value, Algorithm.BAREISS, (), time.perf_counter() - t0)
    value = laplace_det(M)
    return DetResult(value, Algorithm.LAPLACE, (), time.perf_counter() - t0)
