"""Formal symmetric functions in the m/e/h/p/s bases.

A :class:`SymFunc` is a basis tag plus a finite map partition -> rational.
Power sums are the hub: every basis knows how to expand its elements in p,
and how to read a p-expansion back (via per-degree transition matrices that
are built on first use).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exact import as_rational, classical_det, factorial, matrix_inverse, rational_str
from .laurent import (
    LaurentPoly,
    alternant,
    exact_divide,
    kernel,
    orbit_sum,
    pairing_constant_term,
    staircase,
    vandermonde,
)
from .partitions import Partition, conjugate, partitions_of, sort_parts, z_lambda

BASES = ("m", "e", "h", "p", "s")
MULTIPLICATIVE = ("e", "h", "p")

Coeffs = dict  # Partition -> Fraction


class SymFunc:
    """Symmetric function stored in one basis.

    Equality is value equality: elements given in different bases are compared
    after conversion.
    """

    __slots__ = ("basis", "coeffs", "_hash")

    def __init__(self, basis: str, coeffs: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            c = as_rational(c)
            clean[lam] = clean.get(lam, 0) + c
        self.basis = basis
        self.coeffs = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, basis: str, coeffs: dict) -> "SymFunc":
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def element(cls, basis: str, lam, c=1) -> "SymFunc":
        return cls(basis, {Partition(lam): c})

    @classmethod
    def scalar(cls, c, basis: str = "p") -> "SymFunc":
        return cls(basis, {Partition(()): c})

    # ring plumbing

    def zero(self) -> "SymFunc":
        return SymFunc._raw(self.basis, {})

    def one(self) -> "SymFunc":
        return SymFunc._raw(self.basis, {Partition._trusted(()): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return other if other.basis == self.basis else convert(other, self.basis)
        c = as_rational(other)
        return SymFunc._raw(self.basis, {Partition._trusted(()): c} if c else {})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = v
            else:
                del out[lam]
        return SymFunc._raw(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "SymFunc":
        c = as_rational(c)
        if not c:
            return self.zero()
        return SymFunc._raw(self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return product(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SymFunc":
        if k < 0:
            raise ValueError("negative power of a symmetric function")
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            if other.basis == self.basis:
                return self.coeffs == other.coeffs
            return _to_p(self) == _to_p(other)
        if isinstance(other, (int, Fraction)):
            return self == SymFunc.scalar(other, self.basis)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(_to_p(self).items()))
        return self._hash

    def __repr__(self):
        if not self.coeffs:
            return f"SymFunc({self.basis}: 0)"
        items = sorted(self.coeffs.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))
        shown = " + ".join(f"{c}*{self.basis}{list(lam)}" for lam, c in items[:8])
        more = " + ..." if len(items) > 8 else ""
        return f"SymFunc({shown}{more})"

    def __getitem__(self, lam) -> Fraction:
        return Fraction(self.coeffs.get(Partition(lam), 0))

    @property
    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    def component(self, d: int) -> "SymFunc":
        return SymFunc._raw(self.basis, {k: v for k, v in self.coeffs.items() if sum(k) == d})

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    def to_json(self) -> dict:
        items = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))
        return {
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": rational_str(c)} for lam, c in items],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        return cls(data["basis"], {tuple(t["partition"]): as_rational(t["coeff"]) for t in data["terms"]})


def m(lam) -> SymFunc:
    return SymFunc.element("m", lam)


def e(r: int) -> SymFunc:
    return elementary(r)


def h(r: int) -> SymFunc:
    return complete(r)


def p(r: int) -> SymFunc:
    return SymFunc.element("p", (r,) if r else ())


def elementary(r: int) -> SymFunc:
    """Lambda^r as a formal element: zero for r < 0, one for r = 0."""
    if r < 0:
        return SymFunc._raw("e", {})
    return SymFunc._raw("e", {Partition._trusted((r,) if r else ()): Fraction(1)})


def complete(r: int) -> SymFunc:
    """S^r (complete function h_r), zero for r < 0."""
    if r < 0:
        return SymFunc._raw("h", {})
    return SymFunc._raw("h", {Partition._trusted((r,) if r else ()): Fraction(1)})


# ---------------------------------------------------------------------------
# transition data

def _mul_dicts(a: Mapping, b: Mapping) -> dict:
    """Product in a multiplicative basis: concatenate indices."""
    out: dict = defaultdict(Fraction)
    for la, ca in a.items():
        for lb, cb in b.items():
            out[sort_parts(la + lb)] += ca * cb
    return {k: v for k, v in out.items() if v}


def _add_into(acc: dict, src: Mapping, c) -> None:
    for k, v in src.items():
        acc[k] = acc.get(k, 0) + c * v


@lru_cache(maxsize=None)
def _generator_in_p(kind: str, r: int) -> dict:
    """e_r or h_r expanded on power sums: sum_rho (+-1) p_rho / z_rho."""
    out = {}
    for rho in partitions_of(r):
        c = Fraction(1, z_lambda(rho))
        if kind == "e" and (r - len(rho)) % 2:
            c = -c
        out[rho] = c
    return out


@lru_cache(maxsize=None)
def _p_in_m_row(rho: tuple) -> dict:
    """p_rho = sum_mu R(rho, mu) m_mu.

    R counts maps from the parts of rho onto the rows of mu with the right
    row sums.
    """
    d = sum(rho)
    out = {}
    for mu in partitions_of(d):
        if len(mu) > len(rho):
            continue
        count = _fill_count(tuple(rho), tuple(mu))
        if count:
            out[mu] = Fraction(count)
    return out


def _fill_count(rho: tuple, mu: tuple) -> int:
    @lru_cache(maxsize=None)
    def go(i: int, caps: tuple) -> int:
        if i == len(rho):
            return int(not any(caps))
        total = 0
        part = rho[i]
        for j, c in enumerate(caps):
            if c >= part:
                total += go(i + 1, caps[:j] + (c - part,) + caps[j + 1:])
        return total

    return go(0, mu)


@lru_cache(maxsize=None)
def _to_p_element(basis: str, lam: tuple) -> dict:
    """Expansion of the basis element b_lam on power sums."""
    lam = Partition._trusted(tuple(lam))
    if basis == "p":
        return {lam: Fraction(1)}
    if basis in ("e", "h"):
        out = {Partition._trusted(()): Fraction(1)}
        for r in lam:
            out = _mul_dicts(out, _generator_in_p(basis, r))
        return out
    if basis == "m":
        return _m_to_p_matrix(sum(lam))[lam]
    if basis == "s":
        return dict(_to_p(schur(lam)))
    raise ValueError(basis)


@lru_cache(maxsize=None)
def _m_to_p_matrix(d: int) -> dict:
    parts = partitions_of(d)
    idx = {lam: i for i, lam in enumerate(parts)}
    mat = [[Fraction(0)] * len(parts) for _ in parts]
    for rho in parts:
        for mu, c in _p_in_m_row(rho).items():
            mat[idx[rho]][idx[mu]] = c
    inv = matrix_inverse(mat)  # rows: m_mu in terms of p_rho
    return {mu: {rho: inv[i][j] for j, rho in enumerate(parts) if inv[i][j]} for i, mu in enumerate(parts)}


@lru_cache(maxsize=None)
def _p_to_basis_matrix(basis: str, d: int) -> dict:
    """rho -> expansion of p_rho in ``basis`` (degree d)."""
    parts = partitions_of(d)
    if basis == "p":
        return {rho: {rho: Fraction(1)} for rho in parts}
    if basis == "m":
        return {rho: _p_in_m_row(tuple(rho)) for rho in parts}
    idx = {lam: i for i, lam in enumerate(parts)}
    mat = [[Fraction(0)] * len(parts) for _ in parts]
    for lam in parts:
        for rho, c in _to_p_element(basis, tuple(lam)).items():
            mat[idx[lam]][idx[rho]] = c
    inv = matrix_inverse(mat)  # rows: p_rho in terms of b_lam
    return {rho: {lam: inv[i][j] for j, lam in enumerate(parts) if inv[i][j]} for i, rho in enumerate(parts)}


def _to_p(f: SymFunc) -> dict:
    if f.basis == "p":
        return f.coeffs
    acc: dict = {}
    for lam, c in f.coeffs.items():
        _add_into(acc, _to_p_element(f.basis, tuple(lam)), c)
    return {k: v for k, v in acc.items() if v}


def _from_p(coeffs: Mapping, basis: str) -> SymFunc:
    if basis == "p":
        return SymFunc._raw("p", {k: v for k, v in coeffs.items() if v})
    acc: dict = {}
    for rho, c in coeffs.items():
        _add_into(acc, _p_to_basis_matrix(basis, sum(rho))[rho], c)
    return SymFunc._raw(basis, {k: v for k, v in acc.items() if v})


def convert(f: SymFunc, target: str) -> SymFunc:
    """Same symmetric function written in the ``target`` basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    return _from_p(_to_p(f), target)


def product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Exact product, returned in the basis of ``f``."""
    if f.basis == g.basis and f.basis in MULTIPLICATIVE:
        return SymFunc._raw(f.basis, _mul_dicts(f.coeffs, g.coeffs))
    if f.basis in MULTIPLICATIVE:
        return SymFunc._raw(f.basis, _mul_dicts(f.coeffs, convert(g, f.basis).coeffs))
    return _from_p(_mul_dicts(_to_p(f), _to_p(g)), f.basis)


def p_coefficients(f: SymFunc) -> dict:
    """Power-sum coordinates (read-only view)."""
    return _to_p(f)


# ---------------------------------------------------------------------------
# alphabets and evaluation

@dataclass(frozen=True)
class Alphabet:
    """Where a symmetric function gets evaluated.

    ``formal`` keeps things symbolic, ``finite`` holds a list of rational
    letters (repeats allowed), ``zero`` is the alphabet A_0 whose elementary
    functions all vanish outside degree 0.
    """

    kind: str = "formal"
    values: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in ("formal", "finite", "zero"):
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))

    @classmethod
    def formal(cls) -> "Alphabet":
        return cls("formal")

    @classmethod
    def finite(cls, values: Iterable) -> "Alphabet":
        return cls("finite", tuple(values))

    @classmethod
    def azero(cls) -> "Alphabet":
        return cls("zero")

    def __add__(self, other: "Alphabet") -> "Alphabet":
        if self.kind != "finite" or other.kind != "finite":
            raise ValueError("alphabet sums are only built for finite alphabets")
        return Alphabet.finite(self.values + other.values)

    def to_json(self):
        if self.kind == "finite":
            return [rational_str(v) for v in self.values]
        return self.kind


def elementary_values(values: Sequence, r: int) -> Fraction:
    """e_r of a list of rationals (0 for r < 0 or r > len)."""
    if r < 0 or r > len(values):
        return Fraction(0)
    row = [Fraction(1)] + [Fraction(0)] * r
    for x in values:
        for j in range(r, 0, -1):
            row[j] += x * row[j - 1]
    return row[r]


def complete_values(values: Sequence, r: int) -> Fraction:
    if r < 0:
        return Fraction(0)
    row = [Fraction(1)] + [Fraction(0)] * r
    for x in values:
        for j in range(1, r + 1):
            row[j] += x * row[j - 1]
    return row[r]


def lambda_of(X: Alphabet, r: int):
    """Lambda^r(X): SymFunc for the formal alphabet, a rational otherwise."""
    if r < 0:
        return SymFunc._raw("e", {}) if X.kind == "formal" else Fraction(0)
    if X.kind == "formal":
        return elementary(r)
    if X.kind == "zero":
        return Fraction(int(r == 0))
    return elementary_values(X.values, r)


def evaluate(f: SymFunc, X) -> Fraction:
    """Specialize ``f`` at a finite list of rational letters."""
    values = X.values if isinstance(X, Alphabet) else tuple(as_rational(v) for v in X)
    if isinstance(X, Alphabet) and X.kind != "finite":
        raise ValueError("evaluate needs a finite alphabet")
    if f.basis in MULTIPLICATIVE:
        coeffs, basis = f.coeffs, f.basis
    else:
        coeffs, basis = _to_p(f), "p"
    cache: dict[int, Fraction] = {}

    def gen(r: int) -> Fraction:
        if r not in cache:
            if basis == "e":
                cache[r] = elementary_values(values, r)
            elif basis == "h":
                cache[r] = complete_values(values, r)
            else:
                cache[r] = sum((v**r for v in values), Fraction(0))
        return cache[r]

    total = Fraction(0)
    for lam, c in coeffs.items():
        term = c
        for r in lam:
            term *= gen(r)
            if not term:
                break
        total += term
    return total


@lru_cache(maxsize=4096)
def _orbit(lam: tuple, n: int) -> LaurentPoly:
    return orbit_sum(lam, n)


def to_poly(f: SymFunc, n: int) -> LaurentPoly:
    """``f`` restricted to the letters x_1..x_n, as a polynomial."""
    out = LaurentPoly(n)
    acc: dict = {}
    for lam, c in convert(f, "m").coeffs.items():
        if len(lam) > n:
            continue
        for exps in _orbit(tuple(lam), n).terms:
            acc[exps] = acc.get(exps, 0) + c
    return LaurentPoly._raw(n, {k: v for k, v in acc.items() if v}) if acc else out


# ---------------------------------------------------------------------------
# scalar products and lambda-ring operators

def scalar_alpha(f: SymFunc, g: SymFunc, alpha) -> Fraction:
    """<p_lam, p_mu>_alpha = delta z_lam alpha^l(lam), extended bilinearly."""
    alpha = as_rational(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    fp, gp = _to_p(f), _to_p(g)
    if len(fp) > len(gp):
        fp, gp = gp, fp
    total = Fraction(0)
    for rho, c in fp.items():
        d = gp.get(rho)
        if d:
            total += c * d * z_lambda(rho) * alpha ** len(rho)
    return total


def scalar_prime(f, g, n: int, inv_alpha: int) -> Fraction:
    """1/n! C.T.{ f(X) g(X^vee) prod_{i!=j} (1 - x_i/x_j)^(1/alpha) } on n letters.

    Only integer 1/alpha is supported (fractional powers of the kernel are not
    Laurent polynomials).  ``f`` and ``g`` may be SymFunc or LaurentPoly.
    """
    if isinstance(inv_alpha, Fraction):
        if inv_alpha.denominator != 1:
            raise ValueError("scalar_prime needs 1/alpha to be a positive integer")
        inv_alpha = int(inv_alpha)
    if not isinstance(inv_alpha, int) or inv_alpha < 0:
        raise ValueError("scalar_prime needs 1/alpha to be a positive integer")
    fp = f if isinstance(f, LaurentPoly) else to_poly(f, n)
    gp = g if isinstance(g, LaurentPoly) else to_poly(g, n)
    if fp.is_zero() or gp.is_zero():
        return Fraction(0)
    weighted = fp * _kernel(n, inv_alpha)
    return pairing_constant_term(weighted, gp) / factorial(n)


@lru_cache(maxsize=None)
def _kernel(n: int, power: int) -> LaurentPoly:
    return kernel(n, [power] * n)


def _p_substitute(f: SymFunc, weight) -> SymFunc:
    """Apply p_r -> weight(r) p_r multiplicatively; result in f's basis."""
    out = {}
    for rho, c in _to_p(f).items():
        w = c
        for r in rho:
            w *= weight(r)
        if w:
            out[rho] = w
    return _from_p(out, f.basis)


def omega_alpha(f: SymFunc, alpha) -> SymFunc:
    """p_r -> (-1)^(r-1) alpha p_r."""
    alpha = as_rational(alpha)
    return _p_substitute(f, lambda r: alpha if r % 2 else -alpha)


def negate_alphabet(f: SymFunc) -> SymFunc:
    """f(X) -> f(-X) in the lambda-ring sense: p_r -> -p_r."""
    return _p_substitute(f, lambda r: -1)


def bar_alphabet(f: SymFunc) -> SymFunc:
    """f(X) -> f(Xbar) with Xbar = {-x}: p_r -> (-1)^r p_r."""
    return _p_substitute(f, lambda r: -1 if r % 2 else 1)


# ---------------------------------------------------------------------------
# Schur functions

def jacobi_trudi(v: Sequence[int]) -> SymFunc:
    """det(h_{v_i - i + j}) for any integer vector v, in the h basis."""
    n = len(v)
    mat = [[complete(v[i] - i + j) for j in range(n)] for i in range(n)]
    return classical_det(mat, one=complete(0))


@lru_cache(maxsize=None)
def _schur_cached(lam: tuple) -> SymFunc:
    return jacobi_trudi(lam)


def schur(lam) -> SymFunc:
    """Schur function from the complete-function Jacobi-Trudi determinant."""
    return _schur_cached(tuple(Partition(lam)))


def schur_dual(lam, n: int | None = None) -> SymFunc:
    """Schur function from det(e_{lam'_i - i + j}) of size n >= l(lam')."""
    lam = Partition(lam)
    conj = conjugate(lam)
    if n is None:
        n = len(conj)
    if n < len(conj):
        raise ValueError(f"n={n} is smaller than the length of {tuple(conj)}")
    padded = tuple(conj) + (0,) * (n - len(conj))
    mat = [[elementary(padded[i] - i + j) for j in range(n)] for i in range(n)]
    return classical_det(mat, one=elementary(0))


def schur_laurent(v: Sequence[int], n: int | None = None) -> LaurentPoly:
    """det(x_i^{v_j + n - j}) / Delta(X) for a weakly decreasing integer vector."""
    v = tuple(v)
    if n is None:
        n = len(v)
    if len(v) != n:
        raise ValueError(f"need a vector of length {n}")
    if any(a < b for a, b in zip(v, v[1:])):
        raise ValueError(f"{v} is not weakly decreasing")
    numer = alternant(tuple(a + d for a, d in zip(v, staircase(n))))
    try:
        return exact_divide(numer, vandermonde(n))
    except ArithmeticError as exc:  # would mean a broken alternant
        raise RuntimeError(f"alternant for {v} not divisible by the Vandermonde") from exc


def schur_ratio_alternants(lam, n: int) -> LaurentPoly:
    lam = tuple(Partition(lam))
    return schur_laurent(lam + (0,) * (n - len(lam)), n)


def cauchy_dual_truncated(xs: Sequence, ys: Sequence, d: int) -> Fraction:
    """Degree-d part of prod (1 + x_i y_j t), evaluated: e_d of the products."""
    prods = [as_rational(x) * as_rational(y) for x, y in itertools.product(xs, ys)]
    return elementary_values(prods, d)
