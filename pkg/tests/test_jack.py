from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperjack.exact import factorial, multinomial
from hyperjack.jack import (
    b_lambda,
    b_rect_closed,
    branching_check,
    c_cprime,
    jack_basis,
    jack_J,
    jack_J_from_Q,
    jack_norm,
    jack_P,
    jack_Q,
    jack_R,
    kappa,
    scalar_prime_rect,
    scalar_prime_rect_bruteforce,
    skew_P,
    skew_Q,
    skew_Q_adjoint,
)
from hyperjack.partitions import Partition, conjugate, contains, partitions_of, partitions_up_to, rectangle
from hyperjack.symfunc import (
    SymFunc,
    bar_alphabet,
    convert,
    m,
    negate_alphabet,
    omega_alpha,
    p,
    scalar_alpha,
    scalar_prime,
    schur,
)

ALPHAS = [Fraction(1), Fraction(2), Fraction(1, 2)]
half = Fraction(1, 2)


def test_jack_P_examples():
    a = Fraction(3, 5)
    assert jack_P((1, 1), a) == m((1, 1))
    assert jack_P((2,), a) == m((2,)) + m((1, 1)) * (2 / (1 + a))
    assert jack_P((2,), 1) == schur((2,))


@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(6) if lam])
def test_jack_at_one_is_schur(lam):
    assert jack_P(lam, 1) == schur(lam)


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("alpha", ALPHAS + [Fraction(3)])
def test_orthogonality_and_duality(d, alpha):
    shapes = partitions_of(d)
    P = {lam: jack_P(lam, alpha) for lam in shapes}
    Q = {lam: jack_Q(lam, alpha) for lam in shapes}
    for lam in shapes:
        for mu in shapes:
            if lam != mu:
                assert scalar_alpha(P[lam], P[mu], alpha) == 0
            assert scalar_alpha(P[lam], Q[mu], alpha) == (lam == mu)


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("alpha", ALPHAS)
def test_omega_duality(d, alpha):
    for lam in partitions_of(d):
        assert omega_alpha(jack_P(lam, alpha), alpha) == jack_Q(conjugate(lam), 1 / alpha)


@pytest.mark.parametrize("d", range(0, 7))
@pytest.mark.parametrize("alpha", ALPHAS)
def test_b_lambda_is_inverse_norm(d, alpha):
    for lam in partitions_of(d):
        P = jack_P(lam, alpha)
        assert b_lambda(lam, alpha) == 1 / scalar_alpha(P, P, alpha) == 1 / jack_norm(lam, alpha)


@pytest.mark.parametrize("d", range(1, 6))
def test_two_linear_extensions_agree(d):
    for alpha in ALPHAS + [Fraction(5, 3)]:
        a = jack_basis(d, alpha, "dominance")
        b = jack_basis(d, alpha, "extension")
        for lam in a:
            assert a[lam].m == b[lam].m


def test_singular_gram_schmidt():
    with pytest.raises(ArithmeticError):
        jack_basis(2, -1)
    with pytest.raises(ValueError):
        jack_basis(2, 0)


def test_b_lambda_examples():
    a = Fraction(7, 3)
    assert b_lambda((), a) == 1
    assert b_lambda((1,), a) == 1 / a
    assert b_lambda((2,), 1) == 1
    with pytest.raises(ZeroDivisionError):
        b_lambda((2,), Fraction(0))


def test_jack_Q_examples():
    a = Fraction(2)
    assert jack_Q((1,), a) == p(1) * (1 / a)
    for lam in partitions_up_to(4):
        assert jack_Q(lam, 1) == schur(lam)


def test_c_cprime():
    a = Fraction(5, 2)
    assert c_cprime((), a) == (1, 1)
    assert c_cprime((1,), a) == (1, a)
    c, cp = c_cprime((2,), a)
    assert (c, cp) == (a + 1, 2 * a * a)
    assert c / cp == b_lambda((2,), a)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_J_two_forms(alpha):
    assert jack_J((1,), alpha) == p(1)
    for lam in partitions_up_to(6):
        assert jack_J(lam, alpha) == jack_J_from_Q(lam, alpha)


def test_skew_Q_examples():
    a = Fraction(2)
    for lam in partitions_up_to(4):
        assert skew_Q(lam, (), a) == jack_Q(lam, a)
        assert skew_Q(lam, lam, a) == 1


@pytest.mark.parametrize("alpha", [Fraction(2), half])
def test_skew_Q_vanishing_and_adjoint(alpha):
    for lam in partitions_up_to(5):
        for mu in partitions_up_to(sum(lam)):
            sk = skew_Q(lam, mu, alpha)
            if not contains(lam, mu):
                assert sk.is_zero()
            assert sk == skew_Q_adjoint(lam, mu, alpha)


def test_skew_P_ratio():
    a = Fraction(3)
    for lam in partitions_up_to(4):
        assert skew_P(lam, (), a) == jack_P(lam, a)
        for mu in partitions_up_to(sum(lam)):
            if contains(lam, mu):
                ratio = b_lambda(mu, a) / b_lambda(lam, a)
                assert skew_P(lam, mu, a) == skew_Q(lam, mu, a) * ratio


def test_branching_examples():
    assert branching_check((2, 1), 2, [1, 2], [3])
    assert branching_check((1,), Fraction(1, 3), [1, 2], [5, 7])
    assert branching_check((2, 2), half, [1, 2], [])


@given(st.sampled_from([lam for lam in partitions_up_to(4) if lam]), st.sampled_from(ALPHAS),
       st.lists(st.integers(-3, 3), min_size=1, max_size=2), st.lists(st.integers(-3, 3), min_size=1, max_size=2))
def test_branching_random(lam, alpha, xs, ys):
    assert branching_check(lam, alpha, xs, ys)


def test_scalar_prime_rect_examples():
    for n in (1, 2, 3):
        for k in (1, 2):
            assert scalar_prime_rect((), n, Fraction(1, k)) == Fraction(multinomial(n * k, [k] * n), factorial(n))
    assert scalar_prime_rect((1,), 2, 1) == scalar_prime_rect_bruteforce((1,), 2, 1)
    with pytest.raises(ValueError):
        scalar_prime_rect((1,), 2, Fraction(2, 3))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (2, 1), (2, 2)])
def test_scalar_prime_rect_vs_constant_term(n, mu):
    assert scalar_prime_rect(mu, n, half) == scalar_prime_rect_bruteforce(mu, n, half)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2])
def test_primed_orthogonality(n, k):
    alpha = Fraction(1, k)
    shapes = [lam for lam in partitions_up_to(4, n)]
    for lam in shapes:
        for mu in shapes:
            if lam != mu and sum(lam) == sum(mu):
                assert scalar_prime(jack_P(lam, alpha), jack_Q(mu, alpha), n, k) == 0


def test_jack_R_examples():
    n = 2
    lam = Partition((1, 1))
    assert jack_R(lam, 1, n) == schur(lam) * scalar_prime_rect(conjugate(lam), n, 1)
    assert jack_R((), 2, 3) == scalar_prime_rect((), 3, half)
    with pytest.raises(ValueError):
        jack_R((1,), half, 2)


def test_jack_R_vanishes_when_first_part_exceeds_n():
    for lam in partitions_up_to(5):
        for n in (1, 2, 3):
            for k in (1, 2):
                R = jack_R(lam, k, n)
                assert R.is_zero() == (bool(lam) and lam[0] > n)


def test_jack_R_long_columns_do_not_vanish():
    # three rows on two letters: the primed norm of P_(3) at alpha=1 is <s_3, s_3>' = 1
    lam = Partition((1, 1, 1))
    assert scalar_prime(schur((3,)), schur((3,)), 2, 1) == 1
    assert jack_R(lam, 1, 2) == schur(lam)


@pytest.mark.parametrize("k", [1, 2])
def test_jack_R_negation_homogeneity(k):
    for lam in partitions_up_to(4):
        R = jack_R(lam, k, 3)
        minus_xbar = bar_alphabet(negate_alphabet(R))
        assert minus_xbar == negate_alphabet(R) * (-1) ** sum(lam)


def test_kappa_examples():
    assert kappa(3, 0, 0, 2) == 1
    assert kappa(1, 1, 0, 1) == 1
    # n=2, p=1, l=1, k=1: rectangle factors 1/1 and 2/2, extra row 3/3
    assert kappa(2, 1, 1, 1) == 1
    # n=2, p=1, l=1, k=2: 1/2 * 3/4 * 4/5
    assert kappa(2, 1, 1, 2) == Fraction(3, 10)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2])
def test_b_rect_closed(n, k):
    assert b_rect_closed(n, k) == b_lambda(rectangle(n, k * (n - 1)), k)


def test_b_rect_closed_examples():
    assert b_rect_closed(1, 5) == 1
    assert b_rect_closed(2, 1) == 1 == b_lambda((2,), 1)
    assert b_rect_closed(2, 2) == b_lambda((2, 2), 2)
    with pytest.raises(ValueError):
        b_rect_closed(0, 1)


def test_jack_p_coordinates_are_consistent():
    P = jack_P((3, 1), half)
    assert convert(convert(P, "p"), "m") == P
    assert isinstance(P, SymFunc) and P.basis == "m"
