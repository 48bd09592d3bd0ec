"""The nine-word determinant of a pair (A, B) of 3x3 matrices and the two
candidate closed forms for it.

The nine words, in order, are I, A, A^2, B, B^2, AB, BA, [A,[A,B]],
[B,[B,A]].  Their row-major flattenings form the columns of a 9x9 matrix
whose determinant is compared against

* ``wrong_rhs``:      9 det[A,B] H([A,B])
* ``corrected_rhs``: -9 det[A,B]^2 H([A,B])

Only the corrected form is an identity.  All functions work over any ring
the :mod:`wordspan.matrix` module supports; over floats nothing is
asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Tuple

import numpy as np

from .matrix import (
    Matrix,
    columns_matrix,
    commutator,
    det,
    h_invariant,
    rank_exact,
    vec,
)

WORD_NAMES = ("I", "A", "A^2", "B", "B^2", "AB", "BA", "[A,[A,B]]", "[B,[B,A]]")


def _check_pair(a: Matrix, b: Matrix) -> None:
    if a.n != 3 or b.n != 3:
        raise ValueError("the nine-word identity is about 3x3 matrices")
    if a.ring is not b.ring:
        raise TypeError(f"A and B live in different rings ({a.ring.__name__}, {b.ring.__name__})")


def build_words(a: Matrix, b: Matrix) -> Tuple[Matrix, ...]:
    _check_pair(a, b)
    ab = commutator(a, b)
    ba = commutator(b, a)
    return (
        Matrix.identity(3, a.ring),
        a,
        a @ a,
        b,
        b @ b,
        a @ b,
        b @ a,
        commutator(a, ab),
        commutator(b, ba),
    )


def word_matrix(a: Matrix, b: Matrix) -> Matrix:
    """9x9 matrix with column i equal to vec(word i)."""
    return columns_matrix([vec(w) for w in build_words(a, b)])


def lhs_det(a: Matrix, b: Matrix):
    return det(word_matrix(a, b))


def comm_invariants(a: Matrix, b: Matrix):
    """(det[A,B], H([A,B]))."""
    _check_pair(a, b)
    c = commutator(a, b)
    return det(c), h_invariant(c)


def wrong_rhs(a: Matrix, b: Matrix):
    d, h = comm_invariants(a, b)
    return 9 * d * h


def corrected_rhs(a: Matrix, b: Matrix):
    d, h = comm_invariants(a, b)
    return -9 * d * d * h


@dataclass(frozen=True)
class Residual:
    lhs: Any
    wrong: Any
    corrected: Any
    det_comm: Any
    h_comm: Any
    relation_holds: bool


def residual_relation(a: Matrix, b: Matrix) -> Residual:
    """Evaluate all three sides exactly and check lhs == corrected == -det[A,B] * wrong."""
    if a.ring is float:
        raise TypeError("residual_relation is exact-only; use float_residual for binary64 pairs")
    lhs = lhs_det(a, b)
    d, h = comm_invariants(a, b)
    wrong = 9 * d * h
    corrected = -9 * d * d * h
    holds = lhs == corrected and lhs == -d * wrong
    return Residual(lhs, wrong, corrected, d, h, holds)


def float_residual(a: Matrix, b: Matrix) -> float:
    """|lhs - corrected| / (1 + |lhs|) on a binary64 pair."""
    lhs = lhs_det(a, b)
    return abs(lhs - corrected_rhs(a, b)) / (1.0 + abs(lhs))


@dataclass(frozen=True)
class BasisCertificate:
    det_nonzero: bool
    h_nonzero: bool
    rank: int

    @property
    def hypotheses_hold(self) -> bool:
        return self.det_nonzero and self.h_nonzero

    @property
    def consistent(self) -> bool:
        # when both hypotheses hold the nine words must be a basis
        return not self.hypotheses_hold or self.rank == 9


def basis_certificate(a: Matrix, b: Matrix) -> BasisCertificate:
    if a.ring is float:
        raise TypeError("basis_certificate needs exact rational matrices")
    d, h = comm_invariants(a, b)
    rank = rank_exact(vec(w) for w in build_words(a, b))
    return BasisCertificate(det_nonzero=d != 0, h_nonzero=h != 0, rank=rank)


def random_integer_pair(rng, bound: int) -> Tuple[Matrix, Matrix]:
    """Two 3x3 rational matrices with integer entries uniform on [-bound, bound]."""
    v = [int(x) for x in rng.integers(-bound, bound + 1, size=18)]
    return Matrix([v[0:3], v[3:6], v[6:9]]), Matrix([v[9:12], v[12:15], v[15:18]])


@dataclass
class VerifyReport:
    pairs_tested: int
    relation_failures: int
    wrong_rhs_mismatches: int

    def to_json(self) -> dict:
        return {
            "pairsTested": self.pairs_tested,
            "relationFailures": self.relation_failures,
            "wrongRhsMismatches": self.wrong_rhs_mismatches,
        }


def verify_random(pairs: int, seed: int, entry_bound: int = 9) -> VerifyReport:
    """Check the corrected identity exactly on random integer pairs."""
    if pairs < 0:
        raise ValueError("pairs must be nonnegative")
    if entry_bound < 0:
        raise ValueError("entry bound must be nonnegative")
    rng = np.random.Generator(np.random.PCG64(seed))
    failures = mismatches = 0
    for _ in range(pairs):
        res = residual_relation(*random_integer_pair(rng, entry_bound))
        failures += not res.relation_holds
        mismatches += res.lhs != res.wrong
    return VerifyReport(pairs, failures, mismatches)
