import random
from fractions import Fraction

import pytest

from lieorbits.errors import DependentBasis, SingularMatrix
from lieorbits.ratmat import RatMatrix, as_vector, gram_split, matrix_rank, rat_solve, vec_add


def F(a, b=1):
    return Fraction(a, b)


def test_solve_identity():
    a = RatMatrix.identity(3)
    assert rat_solve(a, as_vector([1, 2, 3])) == (F(1), F(2), F(3))


def test_solve_diagonal():
    a = RatMatrix.from_rows([[2, 0], [0, 4]])
    assert rat_solve(a, as_vector([1, 1])) == (F(1, 2), F(1, 4))


def test_solve_hand_elimination():
    # 2x - y = 1, -x + 2y = 0  =>  x = 2/3, y = 1/3
    a = RatMatrix.from_rows([[2, -1], [-1, 2]])
    assert rat_solve(a, as_vector([1, 0])) == (F(2, 3), F(1, 3))


def test_solve_singular_raises():
    a = RatMatrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrix):
        rat_solve(a, as_vector([1, 1]))


def test_solve_needs_square():
    a = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        rat_solve(a, as_vector([1, 1]))


A2_GRAM = RatMatrix.from_rows([[2, -1], [-1, 2]])


def test_gram_split_empty_subspace():
    v_in, v_perp = gram_split(A2_GRAM, [], as_vector([3, -7]))
    assert v_in == (F(0), F(0))
    assert v_perp == (F(3), F(-7))


def test_gram_split_full_span():
    basis = [as_vector([1, 0]), as_vector([0, 1])]
    v_in, v_perp = gram_split(A2_GRAM, basis, as_vector([5, 2]))
    assert v_in == (F(5), F(2))
    assert v_perp == (F(0), F(0))


def test_gram_split_a2_example():
    # project a2 off a1: solve <a2 - c a1, a1> = 0 for c = -1/2
    v_in, v_perp = gram_split(A2_GRAM, [as_vector([1, 0])], as_vector([0, 1]))
    assert v_in == (F(-1, 2), F(0))
    assert v_perp == (F(1, 2), F(1))


def test_gram_split_dependent_raises():
    basis = [as_vector([1, 1]), as_vector([2, 2])]
    with pytest.raises(DependentBasis):
        gram_split(A2_GRAM, basis, as_vector([1, 0]))


def _random_matrix(rng, n, lo=-6, hi=6):
    return RatMatrix.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def _random_invertible(rng, n):
    while True:
        m = _random_matrix(rng, n)
        try:
            rat_solve(m, as_vector([1] * n))
        except SingularMatrix:
            continue
        return m


def test_solve_random_roundtrip():
    rng = random.Random(20240)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = _random_invertible(rng, n)
        b = as_vector([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)])
        x = rat_solve(a, b)
        assert a.mat_vec(x) == b


def test_gram_split_random_invariants():
    rng = random.Random(515)
    for _ in range(30):
        n = rng.randint(2, 5)
        # positive definite gram: A^T A + n * I over the rationals
        a = _random_matrix(rng, n, -3, 3)
        gram = RatMatrix.build(
            n, n, lambda i, j: sum(a[k, i] * a[k, j] for k in range(n)) + Fraction(n * int(i == j))
        )
        basis_size = rng.randint(0, n)
        m = _random_invertible(rng, n)
        subspace = [m.row(i) for i in range(basis_size)]
        v = as_vector([rng.randint(-5, 5) for _ in range(n)])
        v_in, v_perp = gram_split(gram, subspace, v)
        assert vec_add(v_in, v_perp) == v
        for s in subspace:
            gw = gram.mat_vec(v_perp)
            assert sum(x * y for x, y in zip(s, gw)) == 0
        if subspace:
            assert matrix_rank(subspace) == len(subspace)
