"""Jack symmetric functions at a concrete rational parameter.

P_lam is built by Gram-Schmidt on the monomial basis of one degree, using the
alpha-deformed power-sum scalar product.  Everything else (Q, J, R, skew
functions) is a rescaling or a structure-constant sum on top of P.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import as_rational, factorial, multinomial
from .partitions import Partition, conjugate, dominance_leq, partitions_of, rectangle, z_lambda
from .symfunc import (
    Alphabet,
    SymFunc,
    _m_to_p_matrix,
    _mul_dicts,
    evaluate,
    scalar_prime,
)


@dataclass(frozen=True)
class JackCacheKey:
    degree: int
    alpha: Fraction
    method: str = "dominance"

    def __post_init__(self):
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")


class _JackRow:
    __slots__ = ("p", "m", "norm")

    def __init__(self, p: dict, m: dict, norm: Fraction):
        self.p = p
        self.m = m
        self.norm = norm


_CACHE: dict[JackCacheKey, dict[Partition, _JackRow]] = {}


def _dot(a: dict, b: dict, alpha: Fraction) -> Fraction:
    if len(a) > len(b):
        a, b = b, a
    total = Fraction(0)
    for rho, c in a.items():
        d = b.get(rho)
        if d:
            total += c * d * z_lambda(rho) * alpha ** len(rho)
    return total


def _axpy(acc: dict, src: dict, c: Fraction) -> None:
    for k, v in src.items():
        w = acc.get(k, 0) - c * v
        if w:
            acc[k] = w
        else:
            acc.pop(k, None)


def _extension_order(d: int) -> list[Partition]:
    """A second linear extension of dominance: by sum of squared parts."""
    return sorted(partitions_of(d), key=lambda lam: (sum(x * x for x in lam), lam))


def jack_basis(d: int, alpha, method: str = "dominance") -> dict[Partition, _JackRow]:
    """All P_lam^(alpha) of degree d.

    ``method="dominance"`` walks reverse-lex order upward and removes only the
    components along strictly dominated P_mu.  ``method="extension"`` walks
    the squared-parts order and projects against every earlier vector; it is
    kept as an independent check of the first.
    """
    alpha = as_rational(alpha)
    key = JackCacheKey(d, alpha, method)
    if key in _CACHE:
        return _CACHE[key]
    m_in_p = _m_to_p_matrix(d)
    if method == "dominance":
        order = list(reversed(partitions_of(d)))
    elif method == "extension":
        order = _extension_order(d)
    else:
        raise ValueError(f"unknown method {method!r}")
    rows: dict[Partition, _JackRow] = {}
    done: list[Partition] = []
    for lam in order:
        base = m_in_p[lam]
        vp = dict(base)
        vm = {lam: Fraction(1)}
        for mu in done:
            if method == "dominance" and not dominance_leq(mu, lam):
                continue
            row = rows[mu]
            c = _dot(base, row.p, alpha) / row.norm
            if c:
                _axpy(vp, row.p, c)
                _axpy(vm, row.m, c)
        norm = _dot(vp, vp, alpha)
        if norm == 0:
            raise ArithmeticError(f"Gram-Schmidt is singular at alpha={alpha} for {tuple(lam)}")
        rows[lam] = _JackRow(vp, vm, norm)
        done.append(lam)
    _CACHE[key] = rows
    return rows


def _row(lam, alpha) -> _JackRow:
    lam = Partition(lam)
    return jack_basis(sum(lam), alpha)[lam]


def jack_P(lam, alpha) -> SymFunc:
    """Monic Jack polynomial P_lam^(alpha), in the monomial basis."""
    return SymFunc._raw("m", dict(_row(lam, alpha).m))


def jack_norm(lam, alpha) -> Fraction:
    """<P_lam, P_lam>_alpha as produced by Gram-Schmidt."""
    return _row(lam, alpha).norm


def c_cprime(lam, alpha) -> tuple[Fraction, Fraction]:
    """Hook products c_lam(alpha) and c'_lam(alpha)."""
    lam = Partition(lam)
    alpha = as_rational(alpha)
    conj = conjugate(lam)
    c = cp = Fraction(1)
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            arm, leg = row - j, conj[j - 1] - i
            c *= alpha * arm + leg + 1
            cp *= alpha * (arm + 1) + leg
    return c, cp


def b_lambda(lam, alpha) -> Fraction:
    """prod over cells (alpha*arm + leg + 1) / (alpha*(arm + 1) + leg) = Q/P."""
    c, cp = c_cprime(lam, alpha)
    if cp == 0:
        raise ZeroDivisionError(f"b_lambda has a vanishing hook at alpha={alpha}")
    return c / cp


def jack_Q(lam, alpha) -> SymFunc:
    return jack_P(lam, alpha).scale(b_lambda(lam, alpha))


def jack_J(lam, alpha) -> SymFunc:
    c, _ = c_cprime(lam, alpha)
    return jack_P(lam, alpha).scale(c)


def jack_J_from_Q(lam, alpha) -> SymFunc:
    _, cp = c_cprime(lam, alpha)
    return jack_Q(lam, alpha).scale(cp)


def _q_p(lam, alpha) -> dict:
    row = _row(lam, alpha)
    b = b_lambda(lam, alpha)
    return {k: v * b for k, v in row.p.items()}


def skew_Q(lam, mu, alpha) -> SymFunc:
    """Q_{lam/mu} = sum_nu <Q_lam, P_nu P_mu>_alpha Q_nu (monomial basis)."""
    lam, mu = Partition(lam), Partition(mu)
    alpha = as_rational(alpha)
    d = sum(lam) - sum(mu)
    if d < 0:
        return SymFunc._raw("m", {})
    q_lam = _q_p(lam, alpha)
    p_mu = _row(mu, alpha).p
    acc: dict = {}
    basis = jack_basis(d, alpha)
    for nu, row in basis.items():
        coef = _dot(q_lam, _mul_dicts(row.p, p_mu), alpha)
        if coef:
            b_nu = b_lambda(nu, alpha)
            for k, v in row.m.items():
                acc[k] = acc.get(k, 0) + coef * b_nu * v
    return SymFunc._raw("m", {k: v for k, v in acc.items() if v})


def skew_P(lam, mu, alpha) -> SymFunc:
    """P_{lam/mu} from J_{lam/mu} = c_lam c'_mu P_{lam/mu} = c'_lam c_mu Q_{lam/mu}."""
    c_l, cp_l = c_cprime(lam, alpha)
    c_m, cp_m = c_cprime(mu, alpha)
    return skew_Q(lam, mu, alpha).scale((cp_l * c_m) / (c_l * cp_m))


def _perp(f_p: dict, g_p: dict, alpha: Fraction) -> dict:
    """Adjoint of multiplication by f under <,>_alpha: p_r^perp = r alpha d/dp_r."""
    out: dict = {}
    for rho, c in f_p.items():
        cur = dict(g_p)
        for r in rho:
            nxt: dict = {}
            for sigma, v in cur.items():
                mult = sigma.count(r)
                if not mult:
                    continue
                parts = list(sigma)
                parts.remove(r)
                key = Partition._trusted(tuple(parts))
                nxt[key] = nxt.get(key, 0) + v * r * alpha * mult
            cur = nxt
        for k, v in cur.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def skew_Q_adjoint(lam, mu, alpha) -> SymFunc:
    """Q_{lam/mu} computed as P_mu^perp Q_lam (power-sum basis)."""
    alpha = as_rational(alpha)
    if sum(mu) > sum(lam):
        return SymFunc._raw("p", {})
    return SymFunc._raw("p", _perp(_row(mu, alpha).p, _q_p(lam, alpha), alpha))


def branching_check(lam, alpha, xs: Sequence, ys: Sequence) -> bool:
    """Q_lam(X + Y) == sum_mu Q_mu(X) Q_{lam/mu}(Y), evaluated exactly."""
    lhs, rhs = branching_sides(lam, alpha, xs, ys)
    return lhs == rhs


def branching_sides(lam, alpha, xs: Sequence, ys: Sequence) -> tuple[Fraction, Fraction]:
    lam = Partition(lam)
    X, Y = Alphabet.finite(xs), Alphabet.finite(ys)
    lhs = evaluate(jack_Q(lam, alpha), X + Y)
    rhs = Fraction(0)
    for d in range(sum(lam) + 1):
        for mu in partitions_of(d):
            sk = skew_Q(lam, mu, alpha)
            if sk.is_zero():
                continue
            rhs += evaluate(jack_Q(mu, alpha), X) * evaluate(sk, Y)
    return lhs, rhs


def _inverse_integer(alpha) -> int:
    alpha = as_rational(alpha)
    inv = 1 / alpha
    if inv.denominator != 1 or inv <= 0:
        raise ValueError(f"1/alpha must be a positive integer, got alpha={alpha}")
    return int(inv)


def scalar_prime_rect(conj_lam, n: int, alpha) -> Fraction:
    """<P_mu, Q_mu>'_{n, 1/alpha} for the Jack parameter alpha with 1/alpha in N.

    Closed form: hook-type product over the cells of mu times the Dyson
    constant term (k n)! / (k!)^n, divided by n!.  Vanishes when l(mu) > n.
    """
    mu = Partition(conj_lam)
    alpha = as_rational(alpha)
    k = _inverse_integer(alpha)
    if len(mu) > n:
        return Fraction(0)
    prod = Fraction(1)
    for i, row in enumerate(mu, start=1):
        for j in range(1, row + 1):
            prod *= Fraction(n + alpha * (j - 1) - i + 1) / (n + alpha * j - i)
    return prod * multinomial(n * k, [k] * n) / factorial(n)


def scalar_prime_rect_bruteforce(conj_lam, n: int, alpha) -> Fraction:
    """Same quantity via the constant-term definition on n letters."""
    k = _inverse_integer(alpha)
    return scalar_prime(jack_P(conj_lam, alpha), jack_Q(conj_lam, alpha), n, k)


def jack_R(lam, alpha, n: int) -> SymFunc:
    """R_lam^{(alpha),n} = <P_{lam'}^{(1/alpha)}, Q_{lam'}^{(1/alpha)}>'_{n,1/alpha} Q_lam^(alpha).

    Requires alpha to be a positive integer.  Zero as soon as lam_1 > n, since
    the primed norm of P_{lam'} in n letters vanishes.
    """
    lam = Partition(lam)
    alpha = as_rational(alpha)
    if alpha.denominator != 1 or alpha <= 0:
        raise ValueError("jack_R needs a positive integer alpha")
    conj = conjugate(lam)
    if len(conj) > n:
        return SymFunc._raw("m", {})
    return jack_Q(lam, alpha).scale(scalar_prime_rect(conj, n, 1 / alpha))


def kappa(n: int, p: int, l: int, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, p + 1):
            out *= Fraction(j + k * (i - 1), j - 1 + k * i)
    for i in range(1, l + 1):
        out *= Fraction(p + 1 + k * (n - i), p + k * (n - i + 1))
    return out


def b_rect_closed(n: int, k: int) -> Fraction:
    """Closed form of b^{(k)} for the rectangle n^{k(n-1)}."""
    if n < 1 or k < 1:
        raise ValueError("b_rect_closed needs n, k >= 1")
    f = math.factorial
    return Fraction(
        f(2 * (n - 1)) * f(n * k) * f((n - 1) * k),
        k * f(n) * f(n - 1) * f((2 * n - 1) * k - 1),
    )


def hankel_rectangle(n: int, k: int) -> Partition:
    """n^{k(n-1)}, the shape indexing the Hankel hyperdeterminant."""
    return rectangle(n, k * (n - 1))
