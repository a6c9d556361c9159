"""Even-order hyperdeterminants, Hankel/Toeplitz tensors and the umbral map.

Det M = 1/n! sum over (sigma_1..sigma_2k) of sign * prod_a M[sigma_1(a), ..., sigma_2k(a)].

For even order the 1/n! is absorbed by fixing sigma_1 = id.  The default
strategy walks the remaining permutations row by row, drops branches that hit
a zero entry, and only counts how often each multiset of entries occurs, so
ring multiplications happen once per distinct product at the very end.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import as_rational, is_zero, one_of, rational_str, zero_of
from .laurent import LaurentPoly, _perm_sign
from .symfunc import Alphabet, SymFunc, complete, elementary, elementary_values, lambda_of, omega_alpha

log = logging.getLogger(__name__)

STRATEGIES = ("naive", "reduced", "collect", "parallel")


@dataclass(frozen=True)
class HyperTensor:
    """Order-``order`` tensor of side ``dim``; entries flat in row-major order."""

    order: int
    dim: int
    entries: tuple

    def __post_init__(self):
        if self.order < 1 or self.dim < 1:
            raise ValueError("order and dim must be positive")
        if len(self.entries) != self.dim**self.order:
            raise ValueError(f"expected {self.dim ** self.order} entries, got {len(self.entries)}")

    @classmethod
    def from_function(cls, order: int, dim: int, f: Callable[[tuple], object]) -> "HyperTensor":
        return cls(order, dim, tuple(f(idx) for idx in itertools.product(range(dim), repeat=order)))

    def flat_index(self, idx: Sequence[int]) -> int:
        out = 0
        for i in idx:
            out = out * self.dim + i
        return out

    def __getitem__(self, idx: Sequence[int]):
        return self.entries[self.flat_index(idx)]

    def map(self, f: Callable) -> "HyperTensor":
        return HyperTensor(self.order, self.dim, tuple(f(x) for x in self.entries))

    def to_json(self) -> dict:
        symbolic = any(isinstance(x, SymFunc) for x in self.entries)
        if symbolic:
            entries = [x.to_json() if isinstance(x, SymFunc) else SymFunc.scalar(x).to_json() for x in self.entries]
        else:
            entries = [rational_str(x) for x in self.entries]
        return {"order": self.order, "dim": self.dim, "ring": "symfunc" if symbolic else "rational", "entries": entries}

    @classmethod
    def from_json(cls, data: dict) -> "HyperTensor":
        ring = data.get("ring", "rational")
        if ring == "rational":
            entries = tuple(as_rational(x) for x in data["entries"])
        elif ring == "symfunc":
            entries = tuple(SymFunc.from_json(x) for x in data["entries"])
        else:
            raise ValueError(f"unknown ring {ring!r}")
        return cls(int(data["order"]), int(data["dim"]), entries)


# ---------------------------------------------------------------------------
# entry generators m -> ring element

class LambdaGenerator:
    """m -> Lambda^m(Y) for a formal, finite or A_0 alphabet."""

    def __init__(self, alphabet: Alphabet | None = None):
        self.alphabet = alphabet or Alphabet.formal()
        self._memo: dict[int, object] = {}

    def __call__(self, m: int):
        if m not in self._memo:
            self._memo[m] = lambda_of(self.alphabet, m)
        return self._memo[m]


class CompleteGenerator:
    """m -> S^m(X) = Lambda^m(-Xbar), formal; the substitution behind Omega+."""

    def __init__(self):
        self._memo: dict[int, SymFunc] = {}

    def __call__(self, m: int):
        if m not in self._memo:
            self._memo[m] = complete(m)
        return self._memo[m]


class OmegaLambdaGenerator:
    """m -> Lambda^m(-alpha Ybar) = omega_alpha(e_m), formal."""

    def __init__(self, alpha):
        self.alpha = as_rational(alpha)
        self._memo: dict[int, SymFunc] = {}

    def __call__(self, m: int):
        if m not in self._memo:
            self._memo[m] = omega_alpha(elementary(m), self.alpha).to("p")
        return self._memo[m]


class SumAlphabetGenerator:
    """m -> Lambda^m(Y + Z) = sum_i Lambda^{m-i}(Y) e_i(Z) with Z finite."""

    def __init__(self, base: Callable[[int], object], z_values: Sequence):
        self.base = base
        self.z = tuple(as_rational(z) for z in z_values)
        self._memo: dict[int, object] = {}

    def __call__(self, m: int):
        if m not in self._memo:
            total = zero_of(self.base(0))
            for i in range(len(self.z) + 1):
                ez = elementary_values(self.z, i)
                if ez:
                    total = total + self.base(m - i) * ez
            self._memo[m] = total
        return self._memo[m]


def hankel(k: int, n: int, v: Sequence[int] | None, gen: Callable[[int], object]) -> HyperTensor:
    """Entries gen(i_1 + ... + i_2k + v[i_1]), indices in 0..n-1."""
    v = tuple(v) if v is not None else (0,) * n
    if len(v) != n:
        raise ValueError(f"shift vector must have length {n}")
    return HyperTensor.from_function(2 * k, n, lambda idx: gen(sum(idx) + v[idx[0]]))


def toeplitz(k: int, n: int, v: Sequence[int] | None, gen: Callable[[int], object]) -> HyperTensor:
    """Entries gen(i_1 + ... + i_k - (i_{k+1} + ... + i_2k) + v[i_1])."""
    v = tuple(v) if v is not None else (0,) * n
    if len(v) != n:
        raise ValueError(f"shift vector must have length {n}")
    return HyperTensor.from_function(
        2 * k, n, lambda idx: gen(sum(idx[:k]) - sum(idx[k:]) + v[idx[0]])
    )


def umbral(f: LaurentPoly, gen: Callable[[int], object]):
    """Linear map c * prod x_i^{p_i} -> c * prod gen(p_i)."""
    groups: dict[tuple, Fraction] = defaultdict(Fraction)
    for exps, c in f.terms.items():
        groups[tuple(sorted(exps))] += c
    zero = zero_of(gen(0))
    total = zero
    for key in sorted(groups):
        c = groups[key]
        if not c:
            continue
        term = None
        for x in key:
            g = gen(x)
            if is_zero(g):
                term = None
                break
            term = g if term is None else term * g
        else:
            if term is None:
                term = one_of(zero)
            total = total + term * c
    return total


# ---------------------------------------------------------------------------
# determinant

def _labels(T: HyperTensor) -> tuple[list, list[int]]:
    """Dedupe entries by value: distinct values and a label per flat slot (-1 = zero)."""
    distinct: list = []
    seen: dict = {}
    labels = []
    for x in T.entries:
        if is_zero(x):
            labels.append(-1)
            continue
        key = _entry_key(x)
        if key not in seen:
            seen[key] = len(distinct)
            distinct.append(x)
        labels.append(seen[key])
    return distinct, labels


def _entry_key(x):
    if isinstance(x, SymFunc):
        return (x.basis, frozenset(x.coeffs.items()))
    if isinstance(x, (int, Fraction)):
        return ("q", x)
    return ("id", id(x))


def _row_choices(n: int, used: tuple) -> list[tuple]:
    return list(itertools.product(*[[c for c in range(n) if not (u >> c) & 1] for u in used]))


def _dfs(labels: list[int], order: int, n: int, start_row: int, used: tuple, parity: int, chosen: tuple,
         counts: dict) -> int:
    """Accumulate sign counts per sorted label multiset; returns leaves reached."""
    free = order - 1
    strides = [n ** (order - 1 - j) for j in range(order)]
    leaves = 0

    def rec(a: int, used: tuple, parity: int, chosen: tuple):
        nonlocal leaves
        if a == n:
            key = tuple(sorted(chosen))
            counts[key] = counts.get(key, 0) + (-1 if parity else 1)
            leaves += 1
            return
        base = a * strides[0]
        for combo in _row_choices(n, used):
            flat = base
            for j in range(free):
                flat += combo[j] * strides[j + 1]
            lab = labels[flat]
            if lab < 0:
                continue
            par = parity
            new_used = list(used)
            for j, c in enumerate(combo):
                par ^= (used[j] >> (c + 1)).bit_count() & 1
                new_used[j] = used[j] | (1 << c)
            rec(a + 1, tuple(new_used), par, chosen + (lab,))

    rec(start_row, used, parity, chosen)
    return leaves


def _first_row_task(args) -> dict:
    labels, order, n, combos = args
    counts: dict = {}
    strides = [n ** (order - 1 - j) for j in range(order)]
    for combo in combos:
        flat = sum(c * strides[j + 1] for j, c in enumerate(combo))
        lab = labels[flat]
        if lab < 0:
            continue
        used = tuple(1 << c for c in combo)
        _dfs(labels, order, n, 1, used, 0, (lab,), counts)
    return counts


def _evaluate_counts(counts: dict, distinct: list, zero):
    total = zero
    for key in sorted(counts):
        c = counts[key]
        if not c:
            continue
        term = distinct[key[0]]
        for lab in key[1:]:
            term = term * distinct[lab]
        total = total + term * c
    return total


def det(T: HyperTensor, strategy: str = "collect", workers: int = 1):
    """Hyperdeterminant of T over the ring of its entries.

    Odd order gives zero.  ``strategy`` picks the evaluation route; all of
    them return the same exact value.
    """
    zero = zero_of(T.entries[0])
    if strategy == "naive":
        return _det_naive(T)[0]
    if T.order % 2:
        return zero
    if strategy == "reduced":
        return _det_reduced(T)[0]
    if strategy == "collect":
        workers = 1
    elif strategy != "parallel":
        raise ValueError(f"unknown strategy {strategy!r}")
    return _det_collect(T, workers)[0]


def _det_naive(T: HyperTensor):
    n, order = T.dim, T.order
    perms = list(itertools.permutations(range(n)))
    signs = [_perm_sign(p) for p in perms]
    zero = zero_of(T.entries[0])
    total = zero
    terms = 0
    for combo in itertools.product(range(len(perms)), repeat=order):
        terms += 1
        sign = 1
        for c in combo:
            sign *= signs[c]
        prod = None
        for a in range(n):
            x = T[tuple(perms[c][a] for c in combo)]
            prod = x if prod is None else prod * x
        total = total + (prod if sign > 0 else -prod)
    return total * Fraction(1, math.factorial(n)), terms


def _det_reduced(T: HyperTensor):
    n, order = T.dim, T.order
    perms = list(itertools.permutations(range(n)))
    signs = [_perm_sign(p) for p in perms]
    total = zero_of(T.entries[0])
    terms = 0
    for combo in itertools.product(range(len(perms)), repeat=order - 1):
        terms += 1
        sign = 1
        for c in combo:
            sign *= signs[c]
        prod = None
        for a in range(n):
            x = T[(a,) + tuple(perms[c][a] for c in combo)]
            prod = x if prod is None else prod * x
        total = total + (prod if sign > 0 else -prod)
    return total, terms


def _det_collect(T: HyperTensor, workers: int = 1):
    n, order = T.dim, T.order
    distinct, labels = _labels(T)
    zero = zero_of(T.entries[0])
    if not distinct:
        return zero, 0
    combos = list(itertools.product(range(n), repeat=order - 1))
    if workers <= 1:
        counts: dict = {}
        leaves = _dfs(labels, order, n, 0, (0,) * (order - 1), 0, (), counts)
    else:
        chunks = [combos[i::workers] for i in range(workers)]
        tasks = [(labels, order, n, chunk) for chunk in chunks if chunk]
        counts = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_first_row_task, tasks):
                for key, c in part.items():
                    counts[key] = counts.get(key, 0) + c
        leaves = None
    log.debug("det: %d distinct products, %s leaves", len(counts), leaves)
    return _evaluate_counts(counts, distinct, zero), leaves


def det_strategy_bench(T: HyperTensor, strategies: Sequence[str] = STRATEGIES, workers: int = 2):
    """Evaluate T with each strategy; returns (value, timing report).

    Raises ``AssertionError`` if two strategies disagree.
    """
    report = {}
    value = None
    n_fact = math.factorial(T.dim)
    for strategy in strategies:
        start = time.perf_counter()
        v = det(T, strategy, workers=workers)
        elapsed = time.perf_counter() - start
        if strategy == "naive":
            terms = n_fact**T.order
        elif strategy == "reduced":
            terms = n_fact ** (T.order - 1)
        else:
            terms = None
        report[strategy] = {"seconds": elapsed, "terms": terms}
        if value is None:
            value = v
        elif v != value:
            raise AssertionError(f"strategy {strategy} disagrees: {v} != {value}")
    return value, report


def permutation_tuple_count(order: int, dim: int, reduced: bool = True) -> int:
    return math.factorial(dim) ** (order - 1 if reduced else order)
