"""The two-parameter counterexample pair A(d), B(e) evaluated symbolically."""

from __future__ import annotations

from dataclasses import dataclass

from .exact import BivarPoly
from .identity import comm_invariants, corrected_rhs, lhs_det, wrong_rhs
from .matrix import Matrix

D = BivarPoly.d()
E = BivarPoly.e()

# golden values: the polynomials printed alongside the counterexample
EXPECTED_LHS = BivarPoly({(5, 5): -27, (6, 6): 9})
EXPECTED_WRONG = BivarPoly({(3, 3): 27, (4, 4): -9})


def param_pair():
    """A = [1,0,1; 0,-1,d; 1,0,1], B = [-1,0,1; 0,1,0; 1,e,-1] over BivarPoly."""
    a = Matrix([[1, 0, 1], [0, -1, D], [1, 0, 1]])
    b = Matrix([[-1, 0, 1], [0, 1, 0], [1, E, -1]])
    return a, b


def substituted_pair(d, e):
    """The same pair with numbers plugged in for d and e (exact if d, e are)."""
    a, b = param_pair()
    return a.map(lambda p: p.evaluate(d, e)), b.map(lambda p: p.evaluate(d, e))


@dataclass(frozen=True)
class SymbolicReport:
    lhs: BivarPoly
    wrong: BivarPoly
    corrected: BivarPoly
    det_comm: BivarPoly
    h_comm: BivarPoly

    def checks(self) -> dict:
        return {
            "lhsMatchesGolden": self.lhs == EXPECTED_LHS,
            "wrongMatchesGolden": self.wrong == EXPECTED_WRONG,
            "lhsDiffersFromWrong": self.lhs != self.wrong,
            "correctedEqualsLhs": self.corrected == self.lhs,
            "residualRelation": self.lhs == -self.det_comm * self.wrong,
            "zeroSetsCoincide": zero_set_check(self.lhs) and zero_set_check(self.wrong),
        }

    def to_json(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "wrong": str(self.wrong),
            "corrected": str(self.corrected),
            "detComm": str(self.det_comm),
            "hComm": str(self.h_comm),
        }


def symbolic_report() -> SymbolicReport:
    a, b = param_pair()
    det_comm, h_comm = comm_invariants(a, b)
    return SymbolicReport(
        lhs=lhs_det(a, b),
        wrong=wrong_rhs(a, b),
        corrected=corrected_rhs(a, b),
        det_comm=det_comm,
        h_comm=h_comm,
    )


def zero_set_check(p: BivarPoly) -> bool:
    """True iff every monomial of ``p`` is divisible by d*e.

    For the zero polynomial this holds vacuously; callers that care should
    test ``p.is_zero()`` separately.
    """
    return p.divisible_by_monomial(1, 1)
