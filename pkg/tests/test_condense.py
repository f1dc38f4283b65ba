import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dodgson.condense import (
    Algorithm,
    CondensationState,
    DetResult,
    FallbackEvent,
    SizeError,
    Strategy,
    ZeroInteriorPivot,
    bareiss_det,
    condensation_layers,
    condense_step,
    det,
    dodgson_det,
    initial_state,
    laplace_det,
)
from dodgson.matrix import Matrix, window

from conftest import leibniz_det, rational_matrices

ALL = list(Strategy)
EXACT_EVERYWHERE = [Strategy.CONDENSATION_FALLBACK, Strategy.BAREISS, Strategy.LAPLACE]


def random_int_matrix(rng, n, lo=-9, hi=9):
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def test_initial_state(sample3):
    s = initial_state(sample3)
    assert s.r == 1
    assert s.layer_prev == sample3.rows
    assert s.layer_prevprev == ((1,) * 4,) * 4


def test_first_step_gives_adjacent_2x2_minors(sample3):
    s = condense_step(initial_state(sample3))
    assert s.r == 2
    assert s.layer_prev == ((-3, -3), (-3, 2))
    assert s.layer_prevprev == sample3.rows


def test_second_step_divides_by_interior(sample3):
    s = condense_step(condense_step(initial_state(sample3)))
    assert s.layer_prev == ((-3,),)
    assert s.r == 3


def test_zero_interior_pivot(zero_interior3):
    s = condense_step(initial_state(zero_interior3))
    with pytest.raises(ZeroInteriorPivot) as info:
        condense_step(s)
    assert info.value.r == 2
    assert info.value.position == (2, 2)


def test_state_layer_sizes_checked():
    with pytest.raises(ValueError):
        CondensationState(((1,),), ((1,),), 1)


def test_cannot_step_a_1x1_layer():
    with pytest.raises(ValueError):
        condense_step(initial_state(Matrix([[4]])))


def test_dodgson_examples(sample3, zero_interior3):
    res = dodgson_det(sample3)
    assert res.value == -3 == leibniz_det(sample3.rows)
    assert res.algorithm is Algorithm.CONDENSATION
    assert res.fallback_events == ()
    assert dodgson_det(Matrix([])).value == 1
    assert dodgson_det(Matrix([[Fraction(-2, 7)]])).value == Fraction(-2, 7)
    with pytest.raises(ZeroInteriorPivot):
        dodgson_det(zero_interior3)
    assert leibniz_det(zero_interior3.rows) == -1


def test_fallback_example(zero_interior3):
    res = det(zero_interior3, Strategy.CONDENSATION_FALLBACK)
    assert res.value == -1
    assert res.algorithm is Algorithm.CONDENSATION_WITH_FALLBACK
    assert res.fallback_events == (FallbackEvent(2, (2, 2)),)


@pytest.mark.parametrize("strategy", EXACT_EVERYWHERE)
def test_identity(strategy):
    assert det(Matrix.identity(5), strategy).value == 1


def test_identity_strict_hits_interior_zeros():
    # a_{2,3} = 0 is a divisor of the second step
    with pytest.raises(ZeroInteriorPivot) as info:
        det(Matrix.identity(5), Strategy.CONDENSATION_STRICT)
    assert (info.value.r, info.value.position) == (2, (2, 3))
    assert det(Matrix.identity(2), Strategy.CONDENSATION_STRICT).value == 1
    res = det(Matrix.identity(5), Strategy.CONDENSATION_FALLBACK)
    assert res.algorithm is Algorithm.CONDENSATION_WITH_FALLBACK


@pytest.mark.parametrize("strategy", EXACT_EVERYWHERE)
def test_zero_row(strategy):
    M = Matrix([[1, 2, 3], [0, 0, 0], [4, 5, 7]])
    assert det(M, strategy).value == 0


def test_strategy_accepts_cli_names(sample3):
    assert det(sample3, "bareiss").algorithm is Algorithm.BAREISS


def test_bareiss_examples():
    assert bareiss_det(Matrix([[6, 4], [10, 10]])) == 20
    assert bareiss_det(Matrix([[0, 1], [1, 0]])) == -1
    assert bareiss_det(Matrix([])) == 1
    assert bareiss_det(Matrix([[0, 0], [0, 5]])) == 0


def test_bareiss_rational_entries():
    M = Matrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(2, 5), 7]])
    assert bareiss_det(M) == Fraction(7, 2) - Fraction(2, 15)


def test_laplace_examples():
    assert laplace_det(Matrix([[Fraction(7, 3)]])) == Fraction(7, 3)
    assert laplace_det(Matrix([[1, 2], [3, 4]])) == -2
    assert laplace_det(Matrix([])) == 1
    with pytest.raises(SizeError):
        laplace_det(Matrix.identity(11))


def test_laplace_handles_ten():
    rng = random.Random(10)
    M = random_int_matrix(rng, 10)
    assert laplace_det(M) == bareiss_det(M)


@settings(max_examples=150)
@given(rational_matrices(max_n=6))
def test_oracles_match_leibniz(M):
    expected = leibniz_det(M.rows)
    assert laplace_det(M) == expected
    assert bareiss_det(M) == expected
    assert det(M, Strategy.CONDENSATION_FALLBACK).value == expected


def test_oracle_agreement_random_integers():
    rng = random.Random(2024)
    fallbacks = 0
    for _ in range(500):
        M = random_int_matrix(rng, rng.randint(1, 7))
        res = det(M, Strategy.CONDENSATION_FALLBACK)
        assert bareiss_det(M) == laplace_det(M) == res.value
        fallbacks += bool(res.fallback_events)
    assert fallbacks > 0


def test_layer_semantics():
    rng = random.Random(7)
    done = 0
    while done < 60:
        M = random_int_matrix(rng, rng.randint(1, 6))
        try:
            states = list(condensation_layers(M))
        except ZeroInteriorPivot:
            continue
        for s in states:
            size = M.n - s.r + 1
            for k in range(1, size + 1):
                for l in range(1, size + 1):
                    assert s.layer_prev[k - 1][l - 1] == laplace_det(window(M, k, l, s.r).to_matrix())
        done += 1


def test_layers_are_integral_for_integer_input():
    rng = random.Random(8)
    M = random_int_matrix(rng, 8, 1, 50)
    try:
        states = list(condensation_layers(M))
    except ZeroInteriorPivot:
        pytest.skip("drew a zero pivot")
    assert all(x.denominator == 1 for s in states for row in s.layer_prev for x in row)


@settings(max_examples=60)
@given(rational_matrices(max_n=5), st.integers(1, 5), st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_row_scaling(M, row, c):
    if M.n == 0:
        return
    i = (row - 1) % M.n + 1
    scaled = M.scale_row(i, c)
    for strategy in EXACT_EVERYWHERE:
        assert det(scaled, strategy).value == c * det(M, strategy).value


@settings(max_examples=60)
@given(rational_matrices(max_n=6))
def test_transpose_invariance(M):
    for strategy in EXACT_EVERYWHERE:
        assert det(M.transpose(), strategy).value == det(M, strategy).value
    try:
        strict = dodgson_det(M).value
    except ZeroInteriorPivot:
        return
    assert strict == bareiss_det(M)


def test_determinism(zero_interior3):
    rng = random.Random(3)
    for M in [zero_interior3] + [random_int_matrix(rng, 6) for _ in range(20)]:
        first = det(M)
        again = det(M)
        assert first == again
        assert first.fallback_events == again.fallback_events


def test_elapsed_excluded_from_equality():
    a = DetResult(Fraction(1), Algorithm.BAREISS, (), 0.5)
    b = DetResult(Fraction(1), Algorithm.BAREISS, (), 9.0)
    assert a == b


def test_condensation_result_cannot_carry_events():
    with pytest.raises(ValueError):
        DetResult(Fraction(1), Algorithm.CONDENSATION, (FallbackEvent(2, (2, 2)),))


@pytest.mark.parametrize("threads", [2, 3, 4])
def test_threads_bit_identical(threads):
    rng = random.Random(11)
    M = random_int_matrix(rng, 24, -10**6, 10**6)
    serial = list(condensation_layers(M))
    parallel = list(condensation_layers(M, threads=threads))
    assert serial == parallel
    s = initial_state(M)
    assert condense_step(s, threads=threads) == condense_step(s)


def test_threads_report_same_pivot(zero_interior3):
    with pytest.raises(ZeroInteriorPivot) as info:
        dodgson_det(zero_interior3, threads=4)
    assert info.value.position == (2, 2)
    rng = random.Random(12)
    for _ in range(10):
        M = random_int_matrix(rng, 30)
        assert det(M, threads=1) == det(M, threads=4)


def test_large_condensation_without_fallback():
    rng = random.Random(13)
    M = random_int_matrix(rng, 60, -10**6, 10**6)
    res = det(M, Strategy.CONDENSATION_FALLBACK)
    assert res.algorithm is Algorithm.CONDENSATION
    assert res.value == bareiss_det(M)
