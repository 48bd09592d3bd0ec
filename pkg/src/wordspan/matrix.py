"""Small square matrices over an exact or floating coefficient ring.

Entries are Fractions, :class:`~wordspan.exact.BivarPoly` values, or Python
floats; one ring per matrix.  Integer entries are promoted to Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, List, Sequence, Tuple

from .exact import BivarPoly, rational

MAX_DIM = 9


def _promote(x):
    if isinstance(x, bool):
        raise TypeError("bool is not a matrix entry")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, BivarPoly, float)):
        return x
    raise TypeError(f"unsupported matrix entry type {type(x).__name__}")


def _ring_of(x) -> type:
    return type(x)


def ring_zero(ring: type):
    if ring is float:
        return 0.0
    if ring is BivarPoly:
        return BivarPoly()
    return Fraction(0)


def ring_one(ring: type):
    if ring is float:
        return 1.0
    if ring is BivarPoly:
        return BivarPoly.const(1)
    return Fraction(1)


class Matrix:
    """Immutable n x n matrix, row-major, 1 <= n <= 9."""

    __slots__ = ("rows", "n", "ring")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_promote(x) for x in r) for r in rows)
        n = len(rows)
        if not 1 <= n <= MAX_DIM:
            raise ValueError(f"matrix dimension {n} outside 1..{MAX_DIM}")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        rings = {type(x) for r in rows for x in r}
        if len(rings) > 1:
            # a constant BivarPoly matrix may carry plain Fractions; lift them
            if rings <= {Fraction, BivarPoly}:
                rows = tuple(
                    tuple(x if isinstance(x, BivarPoly) else BivarPoly.const(x) for x in r)
                    for r in rows
                )
                rings = {BivarPoly}
            else:
                raise TypeError(f"mixed entry rings {sorted(t.__name__ for t in rings)}")
        self.rows: Tuple[Tuple, ...] = rows
        self.n = n
        self.ring = rings.pop()

    @classmethod
    def identity(cls, n: int = 3, ring: type = Fraction) -> "Matrix":
        one, zero = ring_one(ring), ring_zero(ring)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int = 3, ring: type = Fraction) -> "Matrix":
        zero = ring_zero(ring)
        return cls([[zero] * n for _ in range(n)])

    @classmethod
    def unit(cls, i: int, j: int, n: int = 3, ring: type = Fraction) -> "Matrix":
        """Matrix unit E_ij with 1-based indices."""
        one, zero = ring_one(ring), ring_zero(ring)
        return cls([[one if (r, c) == (i - 1, j - 1) else zero for c in range(n)] for r in range(n)])

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        n = len(entries)
        entries = [_promote(x) for x in entries]
        zero = ring_zero(_ring_of(entries[0]))
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({format_matrix(self)!r})"

    def _check(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch {self.n} vs {other.n}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for k in range(1, self.n):
                    acc = acc + r[k] * c[k]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def scale(self, t) -> "Matrix":
        return Matrix([[t * a for a in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return a - b


def mat_scale(a: Matrix, t) -> Matrix:
    return a.scale(t)


def trace(m: Matrix):
    acc = m.rows[0][0]
    for i in range(1, m.n):
        acc = acc + m.rows[i][i]
    return acc


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """[A, B] = AB - BA."""
    return a @ b - b @ a


def h_invariant(m: Matrix):
    """(tr(M)^2 - tr(M^2)) / 2, the second elementary symmetric function of the eigenvalues."""
    t = trace(m)
    s = t * t - trace(m @ m)
    if m.ring is float:
        return s / 2.0
    return s * Fraction(1, 2)


def vec(m: Matrix) -> tuple:
    """Row-major flattening (m11, m12, ..., mnn).

    The order is load-bearing: it fixes the sign of the word determinant, and
    row-major is the order that reproduces the published counterexample
    polynomial.  Column-major would flip that sign.
    """
    return tuple(x for r in m.rows for x in r)


def columns_matrix(vectors: Sequence[Sequence]) -> Matrix:
    """Square matrix whose i-th column is ``vectors[i]``."""
    n = len(vectors)
    if any(len(v) != n for v in vectors):
        raise ValueError("need as many vectors as coordinates")
    return Matrix([[vectors[j][i] for j in range(n)] for i in range(n)])


def _exact_div(a, b):
    if isinstance(a, BivarPoly) or isinstance(b, BivarPoly):
        return BivarPoly._coerce(a).exact_div(b)
    return a / b


def det_bareiss(m: Matrix):
    """Fraction-free (Bareiss) determinant over Fractions or BivarPoly.

    Pivots on the first nonzero entry of the current column; a column with
    no nonzero pivot means the matrix is singular.
    """
    if m.ring is float:
        raise TypeError("det_bareiss needs an exact ring; use det_float")
    n = m.n
    a: List[list] = [list(r) for r in m.rows]
    zero, one = ring_zero(m.ring), ring_one(m.ring)
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pivot - aik * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det_float(m: Matrix) -> float:
    """Gaussian elimination with partial pivoting over binary64."""
    n = m.n
    a = [[float(x) for x in r] for r in m.rows]
    det = 1.0
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0.0:
            return 0.0
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        row_k = a[k]
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                row_i = a[i]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return det


def det(m: Matrix):
    return det_float(m) if m.ring is float else det_bareiss(m)


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def det_permutation_oracle(m: Matrix):
    """Leibniz expansion over all n! permutations; test oracle only."""
    n = m.n
    rows = m.rows
    total = ring_zero(m.ring)
    for p in permutations(range(n)):
        term = rows[0][p[0]]
        for i in range(1, n):
            if term == 0:
                break
            term = term * rows[i][p[i]]
        if term == 0:
            continue
        total = total + term if _perm_sign(p) > 0 else total - term
    return total


def rank_exact(vectors: Iterable[Sequence]) -> int:
    """Rank of a list of rational vectors by Gaussian elimination."""
    rows = [[rational(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][c]
            if f:
                f = f / p[c]
                rows[r] = [x - f * y for x, y in zip(rows[r], p)]
        rank += 1
        if rank == len(rows):
            break
    return rank


class SpanTracker:
    """Incrementally maintained row-echelon basis of a subspace of Q^k."""

    def __init__(self, dim: int):
        self.dim = dim
        self._basis: List[Tuple[int, List[Fraction]]] = []  # (pivot column, normalized row)

    def __len__(self) -> int:
        return len(self._basis)

    def reduce(self, v: Sequence) -> List[Fraction]:
        w = [rational(x) for x in v]
        for col, b in self._basis:
            f = w[col]
            if f:
                w = [x - f * y for x, y in zip(w, b)]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Add ``v``; return True if it enlarged the span."""
        w = self.reduce(v)
        col = next((i for i, x in enumerate(w) if x), None)
        if col is None:
            return False
        inv = 1 / w[col]
        self._basis.append((col, [x * inv for x in w]))
        return True


def parse_matrix(text: str) -> Matrix:
    """Parse ``"1,0,1; 0,-1,1/2; 1,0,1"`` (rows by ``;``, entries by ``,``)."""
    rows = [r for r in text.strip().split(";")]
    if not rows or not rows[0].strip():
        raise ValueError("empty matrix literal")
    try:
        parsed = [[rational(x) for x in r.split(",")] for r in rows]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad matrix literal {text!r}: {exc}") from None
    return Matrix(parsed)


def format_matrix(m: Matrix) -> str:
    return "; ".join(",".join(str(x) for x in r) for r in m.rows)
