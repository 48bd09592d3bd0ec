"""Exact coefficient rings: rationals and sparse polynomials in two variables.

Rationals are :class:`fractions.Fraction`, which already keeps a canonical
form (positive denominator, reduced, zero as ``0/1``).  ``BivarPoly`` is a
small immutable polynomial type in the indeterminates ``d`` and ``e``
(written delta and epsilon elsewhere) with rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterator, Mapping, Tuple, Union

Rational = Fraction

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division does not come out exact."""


def rational(value) -> Fraction:
    """Coerce ``value`` (int, Fraction, or a string such as ``"-3/4"``) to a Fraction.

    Floats are refused: an exact path must never silently pick up rounding.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing to convert float {value!r} to an exact rational")
    if isinstance(value, str):
        value = value.strip()
        if not value:
            raise ValueError("empty rational literal")
    return Fraction(value)


def _grlex_key(mono: Monomial) -> Tuple[int, int]:
    # graded order, ties broken with d > e
    return (mono[0] + mono[1], mono[0])


class BivarPoly:
    """Sparse polynomial in ``d`` and ``e`` over the rationals.

    Terms map exponent pairs ``(deg_d, deg_e)`` to nonzero Fractions; the zero
    polynomial has no terms.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            c = rational(c)
            if c:
                key = (int(i), int(j))
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "BivarPoly":
        # terms must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, deg_d: int, deg_e: int, coeff: Scalar = 1) -> "BivarPoly":
        return cls({(deg_d, deg_e): coeff})

    @classmethod
    def d(cls) -> "BivarPoly":
        return cls.monomial(1, 0)

    @classmethod
    def e(cls) -> "BivarPoly":
        return cls.monomial(0, 1)

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda t: _grlex_key(t[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_grlex_key)
        return mono, self._terms[mono]

    # -- coercion -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "BivarPoly | None":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, bool):
            return BivarPoly.const(other)
        return None

    # -- ring operations ------------------------------------------------

    def __neg__(self) -> "BivarPoly":
        return BivarPoly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "BivarPoly":
        return self

    def __add__(self, other) -> "BivarPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in q._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return BivarPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "BivarPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "BivarPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "BivarPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in q._terms.items():
                m = (i1 + i2, j1 + j2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return BivarPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivarPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = BivarPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, divisor) -> "BivarPoly":
        """Return ``r`` with ``r * divisor == self``.

        Raises :class:`ExactDivisionError` if ``divisor`` does not divide
        ``self`` in the polynomial ring, and ``ZeroDivisionError`` for a zero
        divisor.
        """
        q = self._coerce(divisor)
        if q is None:
            raise TypeError(f"cannot divide BivarPoly by {type(divisor).__name__}")
        if not q._terms:
            raise ZeroDivisionError("polynomial division by zero")
        if len(q._terms) == 1:
            ((qi, qj), qc), = q._terms.items()
            out = {}
            for (i, j), c in self._terms.items():
                if i < qi or j < qj:
                    raise ExactDivisionError(f"{q} does not divide {self}")
                out[(i - qi, j - qj)] = c / qc
            return BivarPoly._raw(out)

        (lqi, lqj), lqc = q.leading_term()
        rem = self
        quot: Dict[Monomial, Fraction] = {}
        # if q | p then the leading term of every intermediate remainder is divisible by lt(q)
        while rem._terms:
            (ri, rj), rc = rem.leading_term()
            if ri < lqi or rj < lqj:
                raise ExactDivisionError(f"{q} does not divide {self}")
            step = BivarPoly._raw({(ri - lqi, rj - lqj): rc / lqc})
            quot[(ri - lqi, rj - lqj)] = rc / lqc
            rem = rem - step * q
        return BivarPoly._raw(quot)

    def __truediv__(self, other) -> "BivarPoly":
        return self.exact_div(other)

    def __rtruediv__(self, other) -> "BivarPoly":
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return p.exact_div(self)

    # -- comparison and evaluation -------------------------------------

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, d, e):
        """Substitute numbers for both indeterminates."""
        total = 0
        for (i, j), c in self._terms.items():
            total += c * d**i * e**j
        return total

    def divisible_by_monomial(self, deg_d: int, deg_e: int) -> bool:
        return all(i >= deg_d and j >= deg_e for i, j in self._terms)

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, ((i, j), c) in enumerate(self):
            factors = []
            if i:
                factors.append("d" if i == 1 else f"d^{i}")
            if j:
                factors.append("e" if j == 1 else f"e^{j}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"
