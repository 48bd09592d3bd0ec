from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from wordspan.exact import BivarPoly
from wordspan.matrix import Matrix

ACCEPTANCE_LINES = []

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=6)

small_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    small_fractions,
    max_size=4,
).map(BivarPoly)

nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def rational_matrices(n=3, entries=small_fractions):
    return st.lists(entries, min_size=n * n, max_size=n * n).map(
        lambda v: Matrix([v[i * n:(i + 1) * n] for i in range(n)])
    )


def random_int_matrix(rng, n, lo, hi):
    return Matrix(rng.integers(lo, hi + 1, size=(n, n)).tolist())


def random_rational_matrix(rng, n=3, bound=5, max_den=4):
    num = rng.integers(-bound, bound + 1, size=(n, n))
    den = rng.integers(1, max_den + 1, size=(n, n))
    return Matrix([[Fraction(int(a), int(b)) for a, b in zip(r, s)] for r, s in zip(num, den)])


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
