"""Exact scalars: rationals, combinatorial counts and the ring helpers.

Scalars are :class:`fractions.Fraction` (ints are accepted wherever a rational
is expected).  Every other ring element in the package (``SymFunc``,
``LaurentPoly``) implements ``+``, ``-``, ``*`` and ``==`` and plugs into the
generic code through :func:`zero_of` and :func:`one_of`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Protocol, Sequence, TypeVar, runtime_checkable

__all__ = [
    "Fraction",
    "Ring",
    "as_rational",
    "rational_str",
    "factorial",
    "multinomial",
    "zero_of",
    "one_of",
    "is_zero",
    "sign_power",
    "matrix_inverse",
]


@runtime_checkable
class Ring(Protocol):
    """Commutative ring with unit, as used by the hyperdeterminant code."""

    def __add__(self, other): ...
    def __mul__(self, other): ...
    def __neg__(self): ...
    def __eq__(self, other): ...


R = TypeVar("R")


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: nothing in the package is allowed to round.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def rational_str(x) -> str:
    """JSON form of a rational: ``"p/q"``, or ``"p"`` when q = 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def multinomial(total: int, parts: Sequence[int]) -> int:
    """``total! / prod(parts_i!)``; the parts must sum to ``total``."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != total:
        raise ValueError(f"parts {list(parts)} do not sum to {total}")
    # product of binomials keeps intermediate values integral
    out, acc = 1, 0
    for p in parts:
        acc += p
        out *= math.comb(acc, p)
    return out


def sign_power(e: int) -> int:
    """(-1)**e for any integer e."""
    return -1 if e % 2 else 1


def zero_of(x):
    """Additive identity of the ring ``x`` lives in."""
    if isinstance(x, (int, Fraction)):
        return Fraction(0)
    return x.zero()


def one_of(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(1)
    return x.one()


def is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def matrix_inverse(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse of a square rational matrix.

    Raises ``ZeroDivisionError`` when the matrix is singular.
    """
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        prow = m[col]
        inv = 1 / prow[col]
        if inv != 1:
            prow = m[col] = [v * inv for v in prow]
        for r in range(n):
            if r == col:
                continue
            f = m[r][col]
            if f:
                row = m[r]
                m[r] = [x - f * y if y else x for x, y in zip(row, prow)]
    return [row[n:] for row in m]


def classical_det(matrix: Sequence[Sequence], one=None):
    """Determinant of a square matrix over any commutative ring.

    Expansion along rows with memoization on the set of used columns, so the
    cost is n * 2^n ring operations instead of n!.  Zero entries are skipped.
    """
    n = len(matrix)
    if one is None:
        one = one_of(matrix[0][0]) if n else Fraction(1)
    if n == 0:
        return one
    memo: dict[int, object] = {}

    def minor(row: int, used: int):
        if row == n:
            return one
        if used in memo:
            return memo[used]
        total = None
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if not is_zero(entry):
                term = entry * minor(row + 1, used | 1 << col)
                if sign < 0:
                    term = -term
                total = term if total is None else total + term
            sign = -sign
        if total is None:
            total = zero_of(one)
        memo[used] = total
        return total

    return minor(0, 0)
