"""Span dimensions of words in a finite matrix set and the resulting length.

S^m is the set of products of m factors drawn from S together with the
identity, so span(S^m) grows with m and stabilizes once a level adds
nothing.  S has length k when span(S^k) is the full matrix algebra and
span(S^(k-1)) is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence

from .matrix import Matrix, SpanTracker, rank_exact, vec


class LengthLoopError(RuntimeError):
    """Span dimensions failed to stabilize within the hard level cap."""


@dataclass
class WordProfile:
    n: int
    dims: List[int]
    generates: bool
    length: Optional[int]
    stabilized_at: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dims": list(self.dims),
            "generates": self.generates,
            "length": self.length,
            "stabilizedAt": self.stabilized_at,
        }


def _validate(s: Sequence[Matrix]) -> int:
    if not s:
        raise ValueError("matrix set must be nonempty")
    n = s[0].n
    for m in s:
        if m.n != n:
            raise ValueError("all matrices must have the same size")
        if m.ring is float:
            raise TypeError("span computations need exact rational matrices")
    return n


def _span_levels(s: Sequence[Matrix], max_level: int):
    """Yield dim span(S^m) for m = 0, 1, ..., max_level, stopping early once stable.

    Only words that enlarged the span at the previous level are extended:
    span(S^m) = span(S^(m-1)) + span(S^(m-1)) S, and the part of
    span(S^(m-1)) S not already coming from span(S^(m-2)) S lies in the
    products of the new basis words.
    """
    n = s[0].n
    tracker = SpanTracker(n * n)
    ident = Matrix.identity(n, s[0].ring)
    tracker.add(vec(ident))
    frontier = [ident]
    yield len(tracker)
    for _ in range(max_level):
        fresh = []
        for w in frontier:
            for g in s:
                p = w @ g
                if tracker.add(vec(p)):
                    fresh.append(p)
        yield len(tracker)
        if not fresh:
            return
        frontier = fresh


def span_dim(s: Sequence[Matrix], m: int) -> int:
    """dim span(S^m), computed level by level."""
    _validate(s)
    if m < 0:
        raise ValueError("word length must be nonnegative")
    last = 1
    for level, d in enumerate(_span_levels(s, m)):
        last = d
        if level == m:
            break
    return last


def span_dim_batch(s: Sequence[Matrix], m: int) -> int:
    """dim span(S^m) by enumerating every m-factor product over S + {I}; oracle."""
    n = _validate(s)
    alphabet = [Matrix.identity(n, s[0].ring)] + list(s)
    words = {}
    for factors in product(alphabet, repeat=m):
        w = alphabet[0]
        for f in factors:
            w = w @ f
        words[w] = None
    return rank_exact(vec(w) for w in words)


def length_of(s: Sequence[Matrix]) -> WordProfile:
    n = _validate(s)
    cap = 2 * n * n
    dims = list(_span_levels(s, cap))
    if len(dims) < 2 or dims[-1] != dims[-2]:
        raise LengthLoopError(f"span did not stabilize within {cap} levels: {dims}")
    full = n * n
    generates = dims[-1] == full
    stabilized_at = dims.index(dims[-1])
    return WordProfile(
        n=n,
        dims=dims,
        generates=generates,
        length=stabilized_at if generates else None,
        stabilized_at=stabilized_at,
    )


@dataclass
class BoundReport:
    length: int
    paz_bound: int
    generic_bound: int
    within_paz: bool
    within_generic: bool
    theorem_sharp: bool

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "pazBound": self.paz_bound,
            "genericBound": self.generic_bound,
            "withinPaz": self.within_paz,
            "withinGeneric": self.within_generic,
            "theoremSharp": self.theorem_sharp,
        }


def check_bounds(profile: WordProfile) -> BoundReport:
    """Compare a generating profile's length with 2n-2 and 2*ceil(log2 n).

    ``theorem_sharp`` records whether length <= 3, which is what the nine-word
    basis predicts for pairs with det[A,B] != 0 and H([A,B]) != 0.
    """
    if not profile.generates or profile.length is None:
        raise ValueError("bounds only apply to generating sets")
    n = profile.n
    paz = 2 * n - 2
    generic = 2 * math.ceil(math.log2(n)) if n > 1 else 0
    return BoundReport(
        length=profile.length,
        paz_bound=paz,
        generic_bound=generic,
        within_paz=profile.length <= paz,
        within_generic=profile.length <= generic,
        theorem_sharp=profile.length <= 3,
    )

