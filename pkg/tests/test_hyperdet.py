import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperjack.exact import classical_det
from hyperjack.hyperdet import (
    STRATEGIES,
    CompleteGenerator,
    HyperTensor,
    LambdaGenerator,
    OmegaLambdaGenerator,
    SumAlphabetGenerator,
    det,
    det_strategy_bench,
    hankel,
    permutation_tuple_count,
    toeplitz,
    umbral,
)
from hyperjack.laurent import LaurentPoly, vandermonde
from hyperjack.symfunc import Alphabet, SymFunc, complete, e, elementary, omega_alpha

from .conftest import rationals

FORMAL = LambdaGenerator(Alphabet.formal())


def random_tensor(rng, order, dim, lo=-3, hi=3):
    return HyperTensor.from_function(order, dim, lambda idx: Fraction(rng.randint(lo, hi), rng.randint(1, 3)))


def tensor_from_matrix(mat):
    n = len(mat)
    return HyperTensor.from_function(2, n, lambda idx: mat[idx[0]][idx[1]])


def test_det_examples():
    for n in (1, 2, 3, 4):
        eye = HyperTensor.from_function(2, n, lambda idx: Fraction(int(idx[0] == idx[1])))
        assert det(eye) == 1
    ones = HyperTensor.from_function(4, 2, lambda idx: Fraction(1))
    assert det(ones) == 0


def test_det_hankel_matches_umbral_vandermonde():
    gen = LambdaGenerator(Alphabet.finite([1, 2]))
    lhs = det(hankel(2, 2, None, gen))
    rhs = umbral(vandermonde(2) ** 4, gen) / 2
    assert lhs == rhs


def test_hankel_examples():
    T = hankel(1, 2, None, FORMAL)
    assert [T[i, j] for i in range(2) for j in range(2)] == [elementary(0), e(1), e(1), e(2)]
    assert det(T) == e(2) - e(1) * e(1)
    for k in (1, 2):
        T = hankel(k, 1, [3], FORMAL)
        assert det(T) == e(3)
    # v only shifts through the first index
    T = hankel(1, 2, [0, 5], FORMAL)
    assert T[1, 0] == e(6) and T[0, 1] == e(1)


def test_toeplitz_examples():
    T = toeplitz(1, 2, None, FORMAL)
    assert [T[i, j] for i in range(2) for j in range(2)] == [1, 0, e(1), 1]
    assert det(T) == 1
    assert det(toeplitz(2, 1, [2], FORMAL)) == e(2)
    with pytest.raises(ValueError):
        toeplitz(1, 2, [0], FORMAL)


def test_umbral_examples():
    assert umbral(LaurentPoly.constant(Fraction(5, 3), 2), FORMAL) == Fraction(5, 3)
    azero = LambdaGenerator(Alphabet.azero())
    for p in (-2, -1, 1, 3):
        assert umbral(LaurentPoly.monomial((p, 0)), azero) == 0
    assert umbral(LaurentPoly.monomial((0, 0)), azero) == 1
    assert umbral(vandermonde(2) ** 2, FORMAL) * Fraction(1, 2) == e(2) - e(1) * e(1)


def test_generators():
    assert CompleteGenerator()(3) == complete(3)
    assert CompleteGenerator()(-1).is_zero()
    assert OmegaLambdaGenerator(2)(2) == omega_alpha(e(2), 2)
    z = SumAlphabetGenerator(LambdaGenerator(Alphabet.finite([1, 2])), [3])
    assert z(2) == 11  # e_2(1, 2, 3)


@pytest.mark.parametrize("n", [3, 4])
def test_order_two_is_classical(n):
    rng = random.Random(n)
    for _ in range(5):
        mat = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        T = tensor_from_matrix(mat)
        for strategy in STRATEGIES:
            assert det(T, strategy) == classical_det(mat)


@pytest.mark.parametrize("dim", [2, 3])
def test_slice_scaling(dim):
    rng = random.Random(dim)
    T = random_tensor(rng, 4, dim)
    c = Fraction(-7, 3)
    scaled = HyperTensor.from_function(4, dim, lambda idx: T[idx] * c if idx[0] == 0 else T[idx])
    assert det(scaled) == c * det(T)


def test_odd_order_vanishes():
    rng = random.Random(3)
    T = random_tensor(rng, 3, 2)
    for strategy in STRATEGIES:
        assert det(T, strategy) == 0


@pytest.mark.parametrize("dim", [2, 3])
def test_swapping_first_index_slices_negates(dim):
    rng = random.Random(10 + dim)
    T = random_tensor(rng, 4, dim)

    def swapped(idx):
        i = {0: 1, 1: 0}.get(idx[0], idx[0])
        return T[(i,) + tuple(idx[1:])]

    assert det(HyperTensor.from_function(4, dim, swapped)) == -det(T)


@given(st.lists(rationals, min_size=5, max_size=5), st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2))
def test_hankel_matrix_unimodular_invariance(seq, c, i, j):
    n = 3
    mat = [[seq[a + b] for b in range(n)] for a in range(n)]
    if i == j:
        return
    moved = [row[:] for row in mat]
    moved[i] = [x + c * y for x, y in zip(mat[i], mat[j])]
    assert det(tensor_from_matrix(moved)) == det(tensor_from_matrix(mat))


def test_strategy_bench_random_tensors():
    rng = random.Random(20240101)
    for _ in range(20):
        order = rng.choice([2, 4])
        dim = rng.choice([1, 2, 3])
        T = random_tensor(rng, order, dim)
        value, report = det_strategy_bench(T, workers=2)
        assert value == det(T, "naive")
        assert set(report) == set(STRATEGIES)
        assert report["naive"]["terms"] == report["reduced"]["terms"] * {1: 1, 2: 2, 3: 6}[dim]


def test_parallel_is_deterministic():
    rng = random.Random(7)
    T = random_tensor(rng, 4, 3)
    values = {det(T, "parallel", workers=w) for w in (1, 2, 8)}
    assert values == {det(T, "reduced")}


def test_parallel_symfunc_entries():
    T = hankel(2, 3, None, FORMAL)
    assert det(T, "parallel", workers=2) == det(T, "reduced")


def test_permutation_counts():
    assert permutation_tuple_count(4, 3) == 6 ** 3
    assert permutation_tuple_count(4, 3, reduced=False) == 6 ** 4


def test_tensor_json_roundtrip():
    rng = random.Random(1)
    T = random_tensor(rng, 2, 2)
    data = T.to_json()
    assert data["ring"] == "rational" and len(data["entries"]) == 4
    assert HyperTensor.from_json(data) == T
    S = hankel(1, 2, None, FORMAL)
    data = S.to_json()
    assert data["ring"] == "symfunc"
    back = HyperTensor.from_json(data)
    assert all(isinstance(x, SymFunc) for x in back.entries)
    assert det(back) == det(S)
    with pytest.raises(ValueError):
        HyperTensor(2, 2, (Fraction(1),) * 3)
