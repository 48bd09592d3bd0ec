"""Exact tools for the nine-word determinant identity on pairs of 3x3 matrices."""

from .exact import BivarPoly, ExactDivisionError, Rational, rational
from .matrix import Matrix, commutator, det, h_invariant, parse_matrix, trace, vec

__all__ = [
    "BivarPoly",
    "ExactDivisionError",
    "Matrix",
    "Rational",
    "commutator",
    "det",
    "h_invariant",
    "parse_matrix",
    "rational",
    "trace",
    "vec",
]
