import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from dodgson.matrix import Matrix


def leibniz_det(rows):
    """Sum over permutations; an oracle independent of every engine path."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def rational_matrices(draw, max_n=6, elements=small_fractions):
    n = draw(st.integers(0, max_n))
    rows = draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n))
    return Matrix(rows)


@pytest.fixture
def sample3():
    return Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])


@pytest.fixture
def zero_interior3():
    return Matrix([[1, 1, 1], [1, 0, 1], [1, 1, 2]])
