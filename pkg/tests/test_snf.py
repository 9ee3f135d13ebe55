import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from diagramkit.snf import IntegerMatrix, smith_normal_form

from oracles import rank_mod_p


def random_matrix(rng, rows, cols, lo=-5, hi=5, density=1.0):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def sympy_divisors(dense):
    if not dense or not dense[0]:
        return ()
    factors = invariant_factors(Matrix(dense), domain=ZZ)
    return tuple(abs(int(f)) for f in factors if f != 0)


def test_examples():
    assert smith_normal_form(IntegerMatrix.from_dense([[2, 0], [0, 3]])).divisors == (1, 6)
    zero = smith_normal_form(IntegerMatrix(3, 4))
    assert (zero.rank, zero.divisors) == (0, ())
    # gcd of entries is 2 and |det| is 8
    assert smith_normal_form(IntegerMatrix.from_dense([[2, 4], [6, 8]])).divisors == (2, 4)


def test_big_entries_stay_exact():
    M = IntegerMatrix.from_dense([[10**30, 0], [0, 10**20]])
    assert smith_normal_form(M).divisors == (10**20, 10**30)
    assert smith_normal_form(M, transforms=True).divisors == (10**20, 10**30)


def test_empty_shapes():
    assert smith_normal_form(IntegerMatrix(0, 5)).rank == 0
    assert smith_normal_form(IntegerMatrix(4, 0), transforms=True).divisors == ()


def test_random_transforms():
    rng = random.Random(2024)
    for _ in range(200):
        dense = random_matrix(rng, 6, 6)
        M = IntegerMatrix.from_dense(dense)
        res = smith_normal_form(M, transforms=True)
        # the transform check runs inside; repeat it here from the outside
        S = Matrix(res.U) * Matrix(dense) * Matrix(res.V)
        for i in range(6):
            for j in range(6):
                expected = res.divisors[i] if i == j and i < res.rank else 0
                assert S[i, j] == expected
        assert abs(Matrix(res.U).det()) == 1
        assert abs(Matrix(res.V).det()) == 1
        assert res.divisors == sympy_divisors(dense)


def test_divisibility_chain_and_rank():
    rng = random.Random(5)
    for _ in range(200):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        dense = random_matrix(rng, rows, cols, density=rng.choice([0.3, 0.6, 1.0]))
        M = IntegerMatrix.from_dense(dense, cols)
        res = smith_normal_form(M)
        assert all(d > 0 for d in res.divisors)
        assert all(b % a == 0 for a, b in zip(res.divisors, res.divisors[1:]))
        assert res.rank == len(res.divisors) == rank_mod_p(M.entries, rows, cols)


def test_sparse_route_agrees_with_dense_route():
    rng = random.Random(11)
    for _ in range(150):
        rows, cols = rng.randint(1, 12), rng.randint(1, 12)
        dense = random_matrix(rng, rows, cols, lo=-3, hi=3, density=0.35)
        M = IntegerMatrix.from_dense(dense, cols)
        sparse = smith_normal_form(M)
        full = smith_normal_form(M, transforms=True)
        assert sparse.divisors == full.divisors == sympy_divisors(dense)


def test_matmul_and_triplets():
    A = IntegerMatrix.from_dense([[1, 2], [0, -1], [3, 0]])
    B = IntegerMatrix.from_dense([[1, 0, 2], [0, 1, -1]])
    assert (A @ B).to_dense() == (Matrix(A.to_dense()) * Matrix(B.to_dense())).tolist()
    with pytest.raises(ValueError):
        A @ A
    text = A.to_triplets()
    assert text == "3 2\n0 0 1\n0 1 2\n1 1 -1\n2 0 3\n"
    assert IntegerMatrix.from_triplets(text) == A


def test_matrix_validation():
    with pytest.raises(IndexError):
        IntegerMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, {(0, 0): 0})
