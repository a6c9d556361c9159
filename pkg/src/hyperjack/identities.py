"""Registry of Jack/hyperdeterminant identities and the grid runner.

Each identity is a pair of functions: one enumerating parameter cases for a
grid, one computing (lhs, rhs) for a case.  The two sides of every identity
go through different code (Gram-Schmidt Jacks on one side, permutation-sum
hyperdeterminants or constant terms on the other) so an agreement means
something.

When an identity fails, the runner checks whether lhs/rhs is one constant
across all of its cases.  A constant ratio points at a normalization or sign
convention; a varying one points at a bug.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .config import DEFAULT, GridConfig
from .exact import as_rational, classical_det, factorial, multinomial, rational_str, sign_power
from .hyperdet import (
    CompleteGenerator,
    HyperTensor,
    LambdaGenerator,
    OmegaLambdaGenerator,
    SumAlphabetGenerator,
    det,
    hankel,
    toeplitz,
    umbral,
)
from .jack import (
    b_rect_closed,
    branching_sides,
    hankel_rectangle,
    jack_P,
    jack_Q,
    jack_R,
    kappa,
    skew_Q,
)
from .laurent import (
    LaurentPoly,
    alternant,
    dyson_ct,
    elementary_poly,
    staircase,
    vandermonde,
)
from .partitions import (
    Partition,
    almost_rectangle,
    conjugate,
    partitions_of,
    partitions_up_to,
    reverse_n,
)
from .symfunc import (
    Alphabet,
    SymFunc,
    cauchy_dual_truncated,
    complete,
    convert,
    evaluate,
    jacobi_trudi,
    negate_alphabet,
    scalar_prime,
    schur,
    schur_laurent,
    to_poly,
)

log = logging.getLogger(__name__)


class CapExceeded(Exception):
    """A case needs more than the configured weight/size budget."""


@dataclass
class IdentityCase:
    id: str
    params: dict
    verdict: str  # "equal", "unequal" or "skipped"
    ratio: str | None = None  # lhs/rhs when the sides are proportional
    degenerate: bool = False  # both sides zero
    reason: str = ""
    lhs_terms: int | None = None
    rhs_terms: int | None = None
    notes: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    cases: Callable[[GridConfig], list[dict]]
    compute: Callable[[dict, GridConfig], tuple]
    exact_required: bool


REGISTRY: dict[str, Identity] = {}


def _register(id_, statement, exact_required=False):
    def wrap(pair):
        cases, compute = pair
        REGISTRY[id_] = Identity(id_, statement, cases, compute, exact_required)
        return pair

    return wrap


# ---------------------------------------------------------------------------
# helpers

def _q(x) -> Fraction:
    return as_rational(x)


def _vals(xs) -> list[Fraction]:
    return [as_rational(x) for x in xs]


def _canon(x):
    if isinstance(x, SymFunc):
        return convert(x, "m").coeffs
    if isinstance(x, LaurentPoly):
        return x.terms
    if isinstance(x, dict):
        return {k: v for k, v in x.items() if v}
    return {(): as_rational(x)} if x else {}


def compare(lhs, rhs) -> tuple[bool, Fraction | None, bool]:
    """(equal, ratio lhs/rhs if proportional, both sides zero)."""
    a, b = _canon(lhs), _canon(rhs)
    if a == b:
        return True, (Fraction(1) if b else None), not b
    if not b:
        return False, None, False
    key = next(iter(b))
    c = Fraction(a.get(key, 0)) / b[key]
    if set(a) == set(b) and all(a[k] == c * b[k] for k in b):
        return False, c, False
    return False, None, False


def _size(x) -> int:
    return len(_canon(x))


def _sign_kn(k: int, n: int) -> int:
    return sign_power(k * n * (n - 1) // 2)


def _mult(n: int, k: int) -> int:
    """(kn choose k, ..., k)."""
    return multinomial(k * n, [k] * n)


def _formal() -> LambdaGenerator:
    return LambdaGenerator(Alphabet.formal())


def _inv_fact(n: int) -> Fraction:
    return Fraction(1, factorial(n))


def _skip_if(cond: bool, why: str):
    if cond:
        raise CapExceeded(why)


def _shape_list(weight: int, max_len: int) -> list[list[int]]:
    return [list(lam) for lam in partitions_up_to(weight, max_len)]


def _nk_pairs(cfg: GridConfig, extra: Iterable = ()) -> list[tuple[int, int]]:
    pairs = [(n, k) for n in cfg.n_values for k in cfg.k_values]
    for nk in extra:
        nk = tuple(nk)
        if nk not in pairs:
            pairs.append(nk)
    return pairs


def _ln_pairs(cfg: GridConfig):
    for n in cfg.n_values:
        for p in cfg.p_values:
            for l in range(n + 1):
                for k in cfg.k_values:
                    yield n, p, l, k


def omega_plus(g: LaurentPoly) -> SymFunc:
    """Omega+ on a symmetric Laurent polynomial, from its definition.

    g * Delta is a combination of alternants a_{lam + delta}; each one is sent
    to the Jacobi-Trudi determinant det(h_{lam_i - i + j}).
    """
    n = g.n
    delta = staircase(n)
    prod = g * vandermonde(n)
    out = complete(0).zero()
    for exps, c in prod.terms.items():
        if all(a > b for a, b in zip(exps, exps[1:])):
            lam = tuple(a - d for a, d in zip(exps, delta))
            out = out + jacobi_trudi(lam) * c
    return out


def omega_plus_integral(g: LaurentPoly) -> SymFunc:
    """Omega+ g as 1/n! of the S^p substitution applied to a_delta a_{-delta} g."""
    n = g.n
    delta = staircase(n)
    body = alternant(delta) * alternant(tuple(-d for d in delta)) * g
    return umbral(body, CompleteGenerator()) * _inv_fact(n)


# ---------------------------------------------------------------------------
# DYSON

def _dyson_cases(cfg):
    out = []
    for n in cfg.n_values:
        for a in itertools.product((0, 1, 2), repeat=n):
            out.append({"a": list(a)})
    out += [{"a": [1, 1, 1, 1]}, {"a": [2, 1, 1, 1]}, {"a": [2, 2, 1, 0]}, {"a": [0, 3, 1, 1]}]
    return out


def _dyson(params, cfg):
    a = params["a"]
    return dyson_ct(a), multinomial(sum(a), a), {}


_register("DYSON", "C.T. prod_{i!=j} (1 - x_i/x_j)^{a_i} = (a_1+...+a_n)! / prod a_i!", True)(
    (_dyson_cases, _dyson))


# ---------------------------------------------------------------------------
# HT-SIGNS

def _ht_cases(cfg):
    rng = random.Random(cfg.seed)
    out = []
    for n in cfg.n_values:
        for k in cfg.k_values:
            unit = [1] + [0] * (n - 1)
            vs = [[0] * n, unit, [-x for x in unit], [rng.randint(-2, 2) for _ in range(n)]]
            for v in vs:
                for direction in ("H=T", "T=H"):
                    out.append({"n": n, "k": k, "v": v, "direction": direction})
    return out


def _ht(params, cfg):
    n, k, v = params["n"], params["k"], params["v"]
    gen = _formal()
    s = _sign_kn(k, n)
    shift = k * (n - 1)
    if params["direction"] == "H=T":
        lhs = det(hankel(k, n, v, gen))
        rhs = det(toeplitz(k, n, [x + shift for x in v], gen)) * s
    else:
        lhs = det(toeplitz(k, n, v, gen))
        rhs = det(hankel(k, n, [x - shift for x in v], gen)) * s
    return lhs, rhs, {}


_register("HT-SIGNS", "H^k_v = (-1)^{kn(n-1)/2} T^k_{v + (k(n-1))^n}; T^k_v = (-1)^{kn(n-1)/2} H^k_{v - (k(n-1))^n}",
          True)((_ht_cases, _ht))


# ---------------------------------------------------------------------------
# D2H

def _d2h_cases(cfg):
    out = []
    for n, k in _nk_pairs(cfg, cfg.extra_nk):
        w = k * n * (n - 1)
        if w <= cfg.formal_weight:
            out.append({"n": n, "k": k, "mode": "formal"})
        else:
            for ys in cfg.wide_alphabets:
                out.append({"n": n, "k": k, "mode": "evaluated", "Y": list(ys)})
    for n, k in cfg.evaluated_nk:
        for ys in cfg.wide_alphabets:
            out.append({"n": n, "k": k, "mode": "evaluated", "Y": list(ys)})
    return out


def _d2h(params, cfg):
    n, k = params["n"], params["k"]
    if params["mode"] == "formal":
        gen = _formal()
    else:
        gen = LambdaGenerator(Alphabet.finite(_vals(params["Y"])))
    lhs = umbral(vandermonde(n) ** (2 * k), gen) * _inv_fact(n)
    rhs = det(hankel(k, n, None, gen))
    return lhs, rhs, {}


_register("D2H", "1/n! int_Y Delta(X)^{2k} = H^k_n(Y)", True)((_d2h_cases, _d2h))


# ---------------------------------------------------------------------------
# TRANS-SCHUR and K1-EXAMPLE

def _trans_cases(cfg):
    return [{"n": n, "k": k, "lam": lam}
            for n in cfg.n_values for k in cfg.k_values
            for lam in _shape_list(cfg.lambda_weight, n)]


def _trans(params, cfg):
    n, k, lam = params["n"], params["k"], Partition(params["lam"])
    gen = _formal()
    body = to_poly(schur(lam), n) * vandermonde(n) ** (2 * k)
    lhs = umbral(body, gen) * _inv_fact(n)
    rhs = det(hankel(k, n, reverse_n(lam, n), gen))
    return lhs, rhs, {}


_register("TRANS-SCHUR", "1/n! int_Y S_lam(X) Delta(X)^{2k} = H^k_{reverse_n(lam)}(Y)", True)(
    (_trans_cases, _trans))


def _k1_cases(cfg):
    return [{"n": n, "lam": lam} for n in cfg.n_values for lam in _shape_list(cfg.lambda_weight, n)]


def _k1(params, cfg):
    n, lam = params["n"], Partition(params["lam"])
    body = to_poly(schur(lam), n) * vandermonde(n) ** 2
    lhs = umbral(body, _formal()) * _inv_fact(n)
    padded = tuple(lam) + (0,) * (n - len(lam))
    shape = conjugate(Partition(x + n - 1 for x in padded))
    rhs = schur(shape) * sign_power(n * (n - 1) // 2)
    return lhs, rhs, {}


_register("K1-EXAMPLE", "1/n! int_Y S_lam(X) Delta(X)^2 = (-1)^{n(n-1)/2} S_{(lam + (n-1)^n)'}(Y)", True)(
    (_k1_cases, _k1))


# ---------------------------------------------------------------------------
# almost-rectangular Jack polynomials as Toeplitz hyperdeterminants

def _gm_cases(cfg):
    out = []
    for n, p, l, k in _ln_pairs(cfg):
        out.append({"n": n, "p": p, "l": l, "k": k})
    return out


def _toeplitz_shift(n, p, l):
    return [p] * (n - l) + [p + 1] * l


def _jack_weight_guard(weight, cfg):
    _skip_if(weight > cfg.max_weight, f"Jack weight {weight} above cap {cfg.max_weight}")


def _gen_matsumoto(params, cfg):
    n, p, l, k = params["n"], params["p"], params["l"], params["k"]
    lam = almost_rectangle(n, p, l, "rows")
    _jack_weight_guard(sum(lam), cfg)
    lhs = jack_R(lam, k, n)
    rhs = det(toeplitz(k, n, _toeplitz_shift(n, p, l), _formal()))
    return lhs, rhs, {"shape": list(lam)}


_register("GEN-MATSUMOTO", "R^{(k),n}_{n^p l} = T^k_{p^{n-l} (p+1)^l}", True)((_gm_cases, _gen_matsumoto))


def _q_kappa(params, cfg):
    n, p, l, k = params["n"], params["p"], params["l"], params["k"]
    lam = almost_rectangle(n, p, l, "rows")
    _jack_weight_guard(sum(lam), cfg)
    lhs = jack_Q(lam, k)
    t = det(toeplitz(k, n, _toeplitz_shift(n, p, l), _formal()))
    rhs = t * (Fraction(factorial(n), _mult(n, k)) * kappa(n, p, l, k))
    return lhs, rhs, {"shape": list(lam)}


_register("Q-KAPPA", "Q^{(k)}_{n^p l} = n! (kn; k,...,k)^{-1} kappa(n,p,l;k) T^k_{p^{n-l}(p+1)^l}", True)(
    (_gm_cases, _q_kappa))


def _matsumoto_cases(cfg):
    return [{"n": n, "p": p, "k": k} for n in cfg.n_values for p in cfg.p_values for k in cfg.k_values]


def _matsumoto(params, cfg):
    n, p, k = params["n"], params["p"], params["k"]
    lam = almost_rectangle(n, p, 0, "rows")
    _jack_weight_guard(sum(lam), cfg)
    lhs = jack_P(lam, k)
    rhs = det(toeplitz(k, n, [p] * n, _formal())) * Fraction(factorial(n), _mult(n, k))
    return lhs, rhs, {}


_register("MATSUMOTO", "P^{(k)}_{n^p} = n! (kn; k,...,k)^{-1} T^k_{p^n}", True)((_matsumoto_cases, _matsumoto))


def _hj_cases(cfg):
    return [{"n": n, "k": k} for n, k in _nk_pairs(cfg)]


def _hankel_jack(params, cfg):
    n, k = params["n"], params["k"]
    shape = hankel_rectangle(n, k)
    _jack_weight_guard(sum(shape), cfg)
    lhs = det(hankel(k, n, None, _formal()))
    rhs = jack_P(shape, k) * (Fraction(_sign_kn(k, n) * _mult(n, k), factorial(n)))
    return lhs, rhs, {}


_register("HANKEL-JACK", "H^k_n = (-1)^{kn(n-1)/2} / n! (kn; k,...,k) P^{(k)}_{n^{k(n-1)}}", True)(
    (_hj_cases, _hankel_jack))


def _inv_alpha(params, cfg):
    n, p, l, k = params["n"], params["p"], params["l"], params["k"]
    shape = almost_rectangle(n, p, l, "cols")
    _jack_weight_guard(sum(shape), cfg)
    lhs = jack_P(shape, Fraction(1, k))
    t = det(toeplitz(k, n, _toeplitz_shift(n, p, l), OmegaLambdaGenerator(k)))
    rhs = t * (Fraction(factorial(n), _mult(n, k)) * kappa(n, p, l, k))
    return lhs, rhs, {"shape": list(shape)}


_register("INV-ALPHA",
          "P^{(1/k)}_{(p+1)^l p^{n-l}}(Y) = n! (kn; k,...,k)^{-1} kappa(n,p,l;k) T^k_{p^{n-l}(p+1)^l}(-k Ybar)")(
    (_gm_cases, _inv_alpha))


def _ltop(params, cfg):
    n, p, l, k = params["n"], params["p"], params["l"], params["k"]
    shape = almost_rectangle(n, p, l, "cols")
    lhs = (elementary_poly(n, n) ** p * elementary_poly(l, n)).invert_alphabet()
    rhs = to_poly(jack_P(shape, Fraction(1, k)), n).invert_alphabet()
    return lhs, rhs, {"shape": list(shape)}


_register("LTOP", "Lambda^n(X^vee)^p Lambda^l(X^vee) = P^{(1/k)}_{(p+1)^l p^{n-l}}(X^vee)")((_gm_cases, _ltop))


# ---------------------------------------------------------------------------
# KERNEL-DUAL and BRANCHING

_PAIRS = (
    (("1", "2"), ("1", "1/2", "3")),
    (("1", "1/2", "3"), ("2", "5")),
    (("1",), ("1", "2")),
)


def _kernel_cases(cfg):
    return [{"k": k, "d": d, "X": list(xs), "Y": list(ys)}
            for k in cfg.k_values for d in range(1, cfg.kernel_degree + 1) for xs, ys in _PAIRS]


def _kernel_dual(params, cfg):
    k, d = params["k"], params["d"]
    xs, ys = _vals(params["X"]), _vals(params["Y"])
    lhs = cauchy_dual_truncated(xs, ys, d)
    rhs = Fraction(0)
    for lam in partitions_of(d):
        rhs += evaluate(jack_Q(lam, Fraction(1, k)), xs) * evaluate(jack_Q(conjugate(lam), k), ys)
    return lhs, rhs, {}


_register("KERNEL-DUAL", "prod (1 + x_i y_j) = sum_lam Q^{(1/k)}_lam(X) Q^{(k)}_{lam'}(Y), per degree")(
    (_kernel_cases, _kernel_dual))


def _branching_cases(cfg):
    out = [{"lam": [2, 1], "alpha": "2", "X": ["1", "2"], "Y": ["3"]}]
    for lam in partitions_up_to(cfg.branching_weight):
        if not lam:
            continue
        for a in cfg.alphas:
            out.append({"lam": list(lam), "alpha": a, "X": ["1", "2"], "Y": ["1/2", "3"]})
    return out


def _branching(params, cfg):
    lhs, rhs = branching_sides(params["lam"], _q(params["alpha"]), _vals(params["X"]), _vals(params["Y"]))
    return lhs, rhs, {}


_register("BRANCHING", "Q_lam(X + Y) = sum_mu Q_mu(X) Q_{lam/mu}(Y)")((_branching_cases, _branching))


# ---------------------------------------------------------------------------
# skew Jack functions and the umbral image of Q^{(1/k)}(X^vee) Delta^{2k}

def _skew_cases(cfg):
    out = []
    for n in cfg.n_values:
        if n < 2:
            continue
        for k in cfg.k_values:
            for lam in partitions_up_to(cfg.skew_weight, n):
                out.append({"n": n, "k": k, "lam": list(lam)})
    return out


def _skew_rhs_factor(n, k) -> Fraction:
    return _sign_kn(k, n) * _mult(n, k) / b_rect_closed(n, k)


def _skew_hankel(params, cfg):
    n, k, lam = params["n"], params["k"], Partition(params["lam"])
    big = hankel_rectangle(n, k)
    _jack_weight_guard(sum(big), cfg)
    q_inv = to_poly(jack_Q(lam, Fraction(1, k)), n).invert_alphabet()
    lhs = umbral(q_inv * vandermonde(n) ** (2 * k), _formal())
    rhs = skew_Q(big, conjugate(lam), k) * _skew_rhs_factor(n, k)
    return lhs, rhs, {}


_register("SKEW-HANKEL",
          "int_Y Q^{(1/k)}_lam(X^vee) Delta(X)^{2k} = (-1)^{kn(n-1)/2} (nk; k,...,k) / b_{n^{k(n-1)}} "
          "Q^{(k)}_{n^{k(n-1)}/lam'}(Y)")((_skew_cases, _skew_hankel))


def _ypz_cases(cfg):
    out = []
    for n, k in _nk_pairs(cfg):
        out.append({"n": n, "k": k, "mode": "hankel", "Z": list(cfg.z_alphabet)})
        for ys in cfg.y_alphabets:
            out.append({"n": n, "k": k, "mode": "jack", "Y": list(ys), "Z": list(cfg.z_alphabet)})
    return out


def _y_plus_z(params, cfg):
    n, k = params["n"], params["k"]
    zs = _vals(params["Z"])
    mz = len(zs)
    body = LaurentPoly.constant(1, n)
    for i in range(n):
        for z in zs:
            body = body * (LaurentPoly.variable(i, n) + z)
    shift = LaurentPoly.monomial([-mz] * n)
    body = body * shift * vandermonde(n) ** (2 * k)
    if params["mode"] == "hankel":
        base = _formal()
        lhs = umbral(body, base) * _inv_fact(n)
        rhs = det(hankel(k, n, None, SumAlphabetGenerator(base, zs)))
    else:
        ys = _vals(params["Y"])
        shape = hankel_rectangle(n, k)
        _jack_weight_guard(sum(shape), cfg)
        lhs = umbral(body, LambdaGenerator(Alphabet.finite(ys))) * _inv_fact(n)
        rhs = evaluate(jack_P(shape, k), ys + zs) * Fraction(_sign_kn(k, n) * _mult(n, k), factorial(n))
    return lhs, rhs, {}


_register("Y-PLUS-Z", "1/n! int_Y prod x_i^{-m} prod (x_i + z_j) Delta^{2k} = H^k_n(Y + Z) "
          "= (-1)^{kn(n-1)/2}/n! (nk; k,...,k) P^{(k)}_{n^{k(n-1)}}(Y + Z)")((_ypz_cases, _y_plus_z))


# ---------------------------------------------------------------------------
# Schur expansion of even Vandermonde powers

def schur_expand_vandermonde(n: int, k: int, method: str = "alternant", max_n: int = 4,
                             max_k: int = 2) -> dict[Partition, Fraction]:
    """Nonzero Schur coefficients of Delta(x_1..x_n)^{2k}.

    ``alternant``: read a_{lam+delta} coefficients off Delta^{2k+1}.
    ``scalar``: <S_lam, Delta^{2k}>'_{n,1} by constant terms.
    ``both``: run both and insist they agree.
    """
    if n > max_n or k > max_k:
        raise CapExceeded(f"n={n}, k={k} above cap ({max_n}, {max_k})")
    if method == "both":
        a = schur_expand_vandermonde(n, k, "alternant", max_n, max_k)
        b = schur_expand_vandermonde(n, k, "scalar", max_n, max_k)
        if a != b:
            raise AssertionError("alternant and scalar-product expansions disagree")
        return a
    d2k = vandermonde(n) ** (2 * k)
    out: dict[Partition, Fraction] = {}
    if method == "alternant":
        delta = staircase(n)
        for exps, c in (d2k * vandermonde(n)).terms.items():
            if all(a > b for a, b in zip(exps, exps[1:])):
                out[Partition(a - d for a, d in zip(exps, delta))] = c
    elif method == "scalar":
        for lam in partitions_of(k * n * (n - 1), n):
            c = scalar_prime(schur(lam), d2k, n, 1)
            if c:
                out[lam] = c
    else:
        raise ValueError(f"unknown method {method!r}")
    return dict(sorted(out.items(), reverse=True))


def vanishing_schur_coefficients(n: int, k: int) -> list[Partition]:
    """Shapes of the right weight and length whose coefficient in Delta^{2k} is zero."""
    support = schur_expand_vandermonde(n, k)
    return [lam for lam in partitions_of(k * n * (n - 1), n) if lam not in support]


def _schur_coeff_cases(cfg):
    out = []
    for n, k in _nk_pairs(cfg):
        for lam in partitions_of(k * n * (n - 1), n):
            out.append({"n": n, "k": k, "lam": list(lam)})
    return out


def _schur_coeff(params, cfg):
    n, k, lam = params["n"], params["k"], Partition(params["lam"])
    coeffs = schur_expand_vandermonde(n, k, method="both")
    lhs = coeffs.get(lam, Fraction(0))
    shift = (2 * k + 1) * (n - 1)
    v = [x - shift for x in reverse_n(lam, n)]
    rhs = det(hankel(k + 1, n, v, LambdaGenerator(Alphabet.azero()))) * sign_power(n * (n - 1) // 2)
    return lhs, rhs, {}


_register("SCHUR-COEFF", "[S_lam] Delta^{2k} = (-1)^{n(n-1)/2} H^{k+1}_{reverse_n(lam) - ((2k+1)(n-1))^n}(A_0)",
          True)((_schur_coeff_cases, _schur_coeff))


# ---------------------------------------------------------------------------
# alternants, Omega+ and the alphabet -X

def _alt_cases(cfg):
    rng = random.Random(cfg.seed + 1)
    out = []
    for n in cfg.n_values:
        for k in cfg.k_values:
            for _ in range(3):
                vecs = [[rng.randint(-2, 4) for _ in range(n)] for _ in range(2 * k)]
                out.append({"n": n, "k": k, "vectors": vecs})
    return out


def _alt_to_det(params, cfg):
    n, k, vecs = params["n"], params["k"], params["vectors"]
    body = LaurentPoly.constant(1, n)
    for v in vecs:
        body = body * alternant(v)
    lhs = umbral(body, CompleteGenerator()) * _inv_fact(n)
    tensor = HyperTensor.from_function(2 * k, n, lambda idx: complete(sum(v[i] for v, i in zip(vecs, idx))))
    rhs = det(tensor)
    return lhs, rhs, {}


_register("ALT-TO-DET", "1/n! int_{-Xbar} a_lam a_mu ... a_rho = Det(S^{lam_{i_1} + mu_{i_2} + ... + rho_{i_2k}}(X))")(
    (_alt_cases, _alt_to_det))


def _omega_cases(cfg):
    lo, hi = cfg.omega_range
    out = []
    for n in cfg.n_values:
        for v in itertools.combinations_with_replacement(range(hi, lo - 1, -1), n):
            out.append({"n": n, "v": list(v)})
    return out


def _omega_plus(params, cfg):
    n, v = params["n"], tuple(params["v"])
    lhs = omega_plus_integral(schur_laurent(v, n))
    rhs = jacobi_trudi(v)
    literal = classical_det([[complete(v[i] + i - j) for j in range(n)] for i in range(n)], one=complete(0))
    return lhs, rhs, {"literal_det_form_matches": compare(lhs, literal)[0]}


_register("OMEGA-PLUS", "1/n! int_{-Xbar} a_delta a_{-delta} S~_lam(X) = det(S^{lam_i - i + j}(X))")(
    (_omega_cases, _omega_plus))


def _pat_cases(cfg):
    out = []
    for n in cfg.n_values:
        for k in cfg.k_values:
            for p in cfg.p_values:
                for l in range(n + 1):
                    out.append({"n": n, "k": k, "p": p, "l": l})
    return out


def _pat_minus_x(params, cfg):
    n, k, p, l = params["n"], params["k"], params["p"], params["l"]
    lam = almost_rectangle(n, p + (k - 1) * (n - 1), l, "rows")
    _jack_weight_guard(sum(lam), cfg)
    lhs = to_poly(negate_alphabet(jack_R(lam, k, n)), n)
    sign = sign_power((k - 1) * n * (n - 1) // 2 + n * p + l)
    rhs = to_poly(schur(almost_rectangle(n, p, l, "cols")), n) * vandermonde(n) ** (2 * (k - 1)) * sign
    return lhs, rhs, {"l_le_p": l <= p}


_register("PAT-MINUS-X", "R^{(k),n}_{n^{p+(k-1)(n-1)} l}(-X) = (-1)^{(k-1)n(n-1)/2 + np + l} "
          "S_{(p+1)^l p^{n-l}}(X) Delta(X)^{2(k-1)}")((_pat_cases, _pat_minus_x))


def _vand_cases(cfg):
    return [{"n": n, "k": k} for n, k in _nk_pairs(cfg, cfg.extra_nk)]


def _vand_jack(params, cfg):
    n, k = params["n"], params["k"]
    shape = hankel_rectangle(n, k)
    _jack_weight_guard(sum(shape), cfg)
    lhs = vandermonde(n) ** (2 * k)
    factor = Fraction(_sign_kn(k, n) * _mult(n, k + 1), factorial(n))
    rhs = to_poly(negate_alphabet(jack_P(shape, k + 1)), n) * factor
    return lhs, rhs, {}


_register("VAND-JACK", "Delta(X)^{2k} = (-1)^{kn(n-1)/2}/n! ((k+1)n; k+1,...,k+1) P^{(k+1)}_{n^{(n-1)k}}(-X)", True)(
    (_vand_cases, _vand_jack))


def _final_skew(params, cfg):
    n, k, lam = params["n"], params["k"], Partition(params["lam"])
    big = hankel_rectangle(n, k)
    _jack_weight_guard(sum(big), cfg)
    g = (to_poly(jack_Q(lam, Fraction(1, k)), n).invert_alphabet()
         * vandermonde(n) ** (2 * (k - 1)) * elementary_poly(n, n) ** (n - 1))
    lhs = to_poly(omega_plus(g), n)
    factor = Fraction(sign_power(n * (n - 1) * (k - 1) // 2 + sum(lam)) * _mult(n, k), factorial(n)) / b_rect_closed(n, k)
    rhs = to_poly(negate_alphabet(skew_Q(big, conjugate(lam), k)), n) * factor
    return lhs, rhs, {}


_register("FINAL-SKEW", "Omega+ Q^{(1/k)}_lam(X^vee) Delta(X)^{2(k-1)} Lambda^n(X)^{n-1} = "
          "(-1)^{n(n-1)(k-1)/2 + |lam|}/n! (nk; k,...,k) / b_{n^{k(n-1)}} Q^{(k)}_{n^{k(n-1)}/lam'}(-X)")(
    (_skew_cases, _final_skew))


# ---------------------------------------------------------------------------
# running

def verify_identity(id_: str, params: dict, cfg: GridConfig = DEFAULT) -> IdentityCase:
    ident = REGISTRY[id_]
    start = time.perf_counter()
    try:
        lhs, rhs, notes = ident.compute(params, cfg)
    except CapExceeded as exc:
        return IdentityCase(id_, params, "skipped", reason=str(exc), seconds=time.perf_counter() - start)
    equal, ratio, degenerate = compare(lhs, rhs)
    return IdentityCase(
        id=id_,
        params=params,
        verdict="equal" if equal else "unequal",
        ratio=None if ratio is None else rational_str(ratio),
        degenerate=degenerate,
        lhs_terms=_size(lhs),
        rhs_terms=_size(rhs),
        notes=notes,
        seconds=time.perf_counter() - start,
    )


def summarize(id_: str, cases: list[IdentityCase]) -> dict:
    """Grid-level verdict for one identity, with erratum detection."""
    ident = REGISTRY[id_]
    attempted = [c for c in cases if c.verdict != "skipped"]
    nondeg = [c for c in attempted if not c.degenerate]
    n_equal = sum(c.verdict == "equal" for c in attempted)
    ratios = {c.ratio for c in nondeg}
    if not attempted:
        status, constant = "empty", None
    elif n_equal == len(attempted):
        status, constant = "exact", "1"
    elif None not in ratios and len(ratios) == 1:
        status, constant = "constant", next(iter(ratios))
    else:
        status, constant = "inconsistent", None
    if status == "exact":
        ok = len(nondeg) >= (1 if ident.exact_required else 3)
    elif status == "constant":
        ok = not ident.exact_required
    else:
        ok = False
    flags: dict[str, int] = {}
    for c in attempted:
        for key, val in c.notes.items():
            if isinstance(val, bool):
                flags[key] = flags.get(key, 0) + int(val)
    return {
        "statement": ident.statement,
        "status": status,
        "constant": constant,
        "cases": len(cases),
        "attempted": len(attempted),
        "equal": n_equal,
        "nondegenerate": len(nondeg),
        "skipped": len(cases) - len(attempted),
        "exact_required": ident.exact_required,
        "ok": ok,
        "flag_counts": flags,
    }


def grid_cases(ids: Iterable[str], cfg: GridConfig = DEFAULT) -> list[tuple[str, dict]]:
    out = []
    for id_ in ids:
        if id_ not in REGISTRY:
            raise KeyError(f"unknown identity {id_!r}")
        out.extend((id_, params) for params in REGISTRY[id_].cases(cfg))
    return out


def _run_one(args):
    id_, params, cfg = args
    return verify_identity(id_, params, cfg)


def run_grid(ids: Iterable[str] | None = None, cfg: GridConfig = DEFAULT, threads: int = 1,
             timings: bool = True) -> dict:
    """Run every case of the selected identities; JSON-ready report."""
    ids = list(REGISTRY) if ids is None else list(ids)
    work = grid_cases(ids, cfg)
    if threads > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_one, [(i, p, cfg) for i, p in work], chunksize=1))
    else:
        results = [_run_one((i, p, cfg)) for i, p in work]
    by_id: dict[str, list[IdentityCase]] = {i: [] for i in ids}
    for case in results:
        by_id[case.id].append(case)
    summary = {i: summarize(i, by_id[i]) for i in ids}
    cases = [c.to_json() for c in results]
    if not timings:
        for c in cases:
            c.pop("seconds", None)
    return {
        "grid": cfg.to_json(),
        "ids": ids,
        "summary": summary,
        "cases": cases,
        "ok": all(s["ok"] for s in summary.values()),
    }


def strip_timings(report: dict) -> dict:
    out = dict(report)
    out["cases"] = [{k: v for k, v in c.items() if k != "seconds"} for c in report["cases"]]
    return out
