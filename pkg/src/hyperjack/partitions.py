"""Integer partitions, shift vectors and the small combinatorics around them."""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

ShiftVector = tuple[int, ...]


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; trailing zeros are dropped.

    A ``Partition`` compares and hashes like the plain tuple of its parts, so
    either can be used as a dictionary key.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"{parts} is not weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError(f"{parts} has negative parts")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(data)


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def sort_parts(parts: Iterable[int]) -> Partition:
    """Partition made from an unordered bag of positive parts."""
    return Partition._trusted(tuple(sorted((p for p in parts if p), reverse=True)))


def conjugate(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


def dominance_leq(mu, lam) -> bool:
    """True when ``mu`` is dominated by ``lam`` (partial sums bounded)."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal weights, got {tuple(mu)} and {tuple(lam)}")
    s_mu = s_lam = 0
    for i in range(max(len(mu), len(lam))):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def multiplicities(lam) -> Counter:
    return Counter(lam)


def z_lambda(lam) -> int:
    """Centralizer order prod_i i^m_i * m_i!."""
    out = 1
    for part, mult in Counter(lam).items():
        out *= part**mult * math.factorial(mult)
    return out


def contains(lam, mu) -> bool:
    """Diagram inclusion mu <= lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def reverse_n(v: Sequence[int], n: int) -> ShiftVector:
    """Pad ``v`` with zeros to length ``n`` then reverse it."""
    if len(v) > n:
        raise ValueError(f"composition {tuple(v)} is longer than n={n}")
    padded = tuple(v) + (0,) * (n - len(v))
    return padded[::-1]


def almost_rectangle(n: int, p: int, l: int, mode: str = "rows") -> Partition:
    """The two almost-rectangular shapes used by the Jack/hyperdeterminant formulas.

    ``mode="rows"`` gives ``n^p l`` = (n, ..., n [p times], l);
    ``mode="cols"`` gives ``(p+1)^l p^(n-l)``, the conjugate of the former.
    """
    if min(n, p, l) < 0:
        raise ValueError("almost_rectangle needs nonnegative arguments")
    if l > n:
        raise ValueError(f"need l <= n, got l={l}, n={n}")
    if mode == "rows":
        return Partition((n,) * p + (l,))
    if mode == "cols":
        return Partition((p + 1,) * l + (p,) * (n - l))
    raise ValueError(f"unknown mode {mode!r}")


def rectangle(width: int, height: int) -> Partition:
    """``width^height``: ``height`` rows of length ``width``."""
    return Partition((width,) * height) if width > 0 else Partition(())


@lru_cache(maxsize=None)
def _partitions(weight: int, largest: int, max_length: int) -> tuple[tuple[int, ...], ...]:
    if weight == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(weight, largest), 0, -1):
        for rest in _partitions(weight - first, first, max_length - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(weight: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``weight`` with at most ``max_length`` parts.

    Order is reverse lexicographic: (3), (2, 1), (1, 1, 1).  That order is a
    linear extension of dominance read from the top.
    """
    if weight < 0:
        return []
    if max_length is None:
        max_length = weight
    return [Partition._trusted(p) for p in _partitions(weight, weight, max_length)]


def partitions_up_to(max_weight: int, max_length: int | None = None) -> list[Partition]:
    return [lam for d in range(max_weight + 1) for lam in partitions_of(d, max_length)]


def cells(lam) -> Iterable[tuple[int, int]]:
    """1-based (row, column) cells of the diagram."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j
