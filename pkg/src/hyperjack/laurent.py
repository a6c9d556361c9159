"""Exact Laurent polynomials in x_1..x_n.

Terms live in a dict keyed by dense exponent tuples.  Negative exponents are
allowed everywhere; zero coefficients are never stored.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import as_rational, multinomial, rational_str

log = logging.getLogger(__name__)

Exponent = tuple[int, ...]


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class LaurentPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | None = None):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        self.n = n
        clean: dict[Exponent, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"exponent {exps} does not have length {n}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def constant(cls, c, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, i: int, n: int) -> "LaurentPoly":
        """x_{i+1} (0-based index)."""
        e = [0] * n
        e[i] = 1
        return cls.monomial(e)

    # ring plumbing

    def zero(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.n, {})

    def one(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.n, {(0,) * self.n: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        return LaurentPoly.constant(other, self.n)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "LaurentPoly":
        c = as_rational(c)
        if not c:
            return self.zero()
        return LaurentPoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        acc: dict[Exponent, Fraction] = defaultdict(int)
        for ea, ca in a.items():
            for eb, cb in b.items():
                acc[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
        return LaurentPoly._raw(self.n, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.n, {tuple(k * x for x in e): Fraction(c) ** k})
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
                log.debug("pow: squared base has %d terms", len(base.terms))
        log.debug("pow: result has %d terms", len(result.terms))
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other, self.n)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"LaurentPoly({self.n}, 0)"
        shown = " + ".join(f"{c}*x^{list(e)}" for e, c in sorted(self.terms.items(), reverse=True)[:8])
        more = " + ..." if len(self.terms) > 8 else ""
        return f"LaurentPoly({self.n}, {shown}{more})"

    def __len__(self):
        return len(self.terms)

    # operations

    def constant_term(self) -> Fraction:
        return Fraction(self.terms.get((0,) * self.n, 0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return Fraction(self.terms.get(tuple(exps), 0))

    def invert_alphabet(self) -> "LaurentPoly":
        """Substitute x_i -> 1/x_i."""
        return LaurentPoly._raw(self.n, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def permute(self, perm: Sequence[int]) -> "LaurentPoly":
        """Send x_i to x_{perm[i]}."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, x in enumerate(e):
                new[perm[i]] = x
            out[tuple(new)] = c
        return LaurentPoly._raw(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.permute(p) == self for p in _transpositions(self.n))

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [as_rational(v) for v in values]
        if len(vals) != self.n:
            raise ValueError(f"need {self.n} values, got {len(vals)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, x in zip(vals, e):
                if x < 0 and v == 0:
                    raise ZeroDivisionError("zero value at a variable with negative exponent")
                if x:
                    term *= v**x
            total += term
        return total

    def degree_bounds(self) -> tuple[Exponent, Exponent]:
        lo = tuple(min(e[i] for e in self.terms) for i in range(self.n))
        hi = tuple(max(e[i] for e in self.terms) for i in range(self.n))
        return lo, hi

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": rational_str(c)} for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: list[dict], n: int | None = None) -> "LaurentPoly":
        if n is None:
            if not data:
                raise ValueError("cannot infer n from an empty term list")
            n = len(data[0]["exponents"])
        return cls(n, {tuple(t["exponents"]): as_rational(t["coeff"]) for t in data})


def _transpositions(n: int):
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        yield p


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Quotient f/g, raising ArithmeticError unless g divides f exactly.

    Lex-leading-term division; valid for Laurent polynomials because lex order
    on Z^n is a group order, so leading terms multiply.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f.zero()
    n = f.n
    g_lead = max(g.terms)
    g_tail = min(g.terms)
    floor = tuple(a - b for a, b in zip(min(f.terms), g_tail))
    gc = g.terms[g_lead]
    rem = dict(f.terms)
    quot: dict[Exponent, Fraction] = {}
    while rem:
        lead = max(rem)
        q_exp = tuple(a - b for a, b in zip(lead, g_lead))
        if q_exp < floor:
            raise ArithmeticError("inexact division")
        q = rem[lead] / gc
        quot[q_exp] = q
        for e, c in g.terms.items():
            key = tuple(a + b for a, b in zip(q_exp, e))
            v = rem.get(key, 0) - q * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPoly._raw(n, quot)


def vandermonde(n: int) -> LaurentPoly:
    """prod_{i<j} (x_i - x_j), expanded."""
    if n < 1:
        raise ValueError("vandermonde needs n >= 1")
    out = LaurentPoly.constant(1, n)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (LaurentPoly.variable(i, n) - LaurentPoly.variable(j, n))
    return out


def alternant(v: Sequence[int]) -> LaurentPoly:
    """sum_sigma sign(sigma) x^(sigma v) = det(x_i^{v_j})."""
    v = tuple(v)
    n = len(v)
    if len(set(v)) < n:
        return LaurentPoly._raw(n, {})
    terms = {}
    for perm in itertools.permutations(range(n)):
        terms[tuple(v[p] for p in perm)] = Fraction(_perm_sign(perm))
    return LaurentPoly._raw(n, terms)


def staircase(n: int) -> tuple[int, ...]:
    """delta = (n-1, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def elementary_poly(r: int, n: int) -> LaurentPoly:
    """e_r(x_1..x_n) as a polynomial."""
    if r < 0 or r > n:
        return LaurentPoly._raw(n, {})
    return LaurentPoly._raw(
        n, {tuple(int(i in c) for i in range(n)): Fraction(1) for c in itertools.combinations(range(n), r)}
    )


def constant_term(f: LaurentPoly) -> Fraction:
    return f.constant_term()


def invert_alphabet(f: LaurentPoly) -> LaurentPoly:
    return f.invert_alphabet()


def evaluate_poly(f: LaurentPoly, values: Sequence) -> Fraction:
    return f.evaluate(values)


def kernel(n: int, exponents: Sequence[int]) -> LaurentPoly:
    """prod_{i != j} (1 - x_i / x_j)^{a_i}."""
    if len(exponents) != n:
        raise ValueError("need one exponent per variable")
    out = LaurentPoly.constant(1, n)
    for i in range(n):
        if not exponents[i]:
            continue
        for j in range(n):
            if i == j:
                continue
            e = [0] * n
            e[i] += 1
            e[j] -= 1
            factor = LaurentPoly._raw(n, {(0,) * n: Fraction(1), tuple(e): Fraction(-1)})
            out = out * factor ** exponents[i]
    return out


def dyson_ct(a: Sequence[int]) -> int:
    """Constant term of prod_{i != j} (1 - x_i/x_j)^{a_i}, by brute expansion."""
    a = list(a)
    if not a:
        return 1
    ct = kernel(len(a), a).constant_term()
    assert ct.denominator == 1
    return int(ct)


def dyson_closed(a: Sequence[int]) -> int:
    return multinomial(sum(a), list(a))


def orbit_sum(exps: Sequence[int], n: int) -> LaurentPoly:
    """Sum of the distinct monomials obtained by permuting ``exps`` (padded to n)."""
    exps = tuple(exps) + (0,) * (n - len(exps))
    if len(exps) > n:
        return LaurentPoly._raw(n, {})
    return LaurentPoly._raw(n, {p: Fraction(1) for p in set(itertools.permutations(exps))})


def pairing_constant_term(f: LaurentPoly, g: LaurentPoly) -> Fraction:
    """C.T.{f(X) g(X^vee)} without forming the product."""
    if f.n != g.n:
        raise ValueError("variable count mismatch")
    if len(f.terms) > len(g.terms):
        f, g = g, f
    gt = g.terms
    return sum((c * gt[e] for e, c in f.terms.items() if e in gt), Fraction(0))
