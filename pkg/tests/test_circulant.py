import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nhtkit.circulant import NhtMatrix, build_first_row, gram, is_identity, row_of
from nhtkit.conditions import check_solution
from nhtkit.errors import InvalidCoefficientsError, NhtError
from oracles import dense_gram, dense_matrix, dense_ok, formula_10, formula_12

N7 = NhtMatrix(10, 7, (2, 1, 2, 5, 3))

# Displayed 10-point mod-7 matrix, row by row.
DISPLAYED_10 = [
    [0, 2, 0, 1, 0, 2, 0, 5, 0, 3],
    [3, 0, 2, 0, 1, 0, 2, 0, 5, 0],
    [0, 3, 0, 2, 0, 1, 0, 2, 0, 5],
    [5, 0, 3, 0, 2, 0, 1, 0, 2, 0],
    [0, 5, 0, 3, 0, 2, 0, 1, 0, 2],
    [2, 0, 5, 0, 3, 0, 2, 0, 1, 0],
    [0, 2, 0, 5, 0, 3, 0, 2, 0, 1],
    [1, 0, 2, 0, 5, 0, 3, 0, 2, 0],
    [0, 1, 0, 2, 0, 5, 0, 3, 0, 2],
    [2, 0, 1, 0, 2, 0, 5, 0, 3, 0],
]


def test_first_row_examples():
    assert build_first_row((2, 1, 2, 5, 3)) == [0, 2, 0, 1, 0, 2, 0, 5, 0, 3]
    assert build_first_row((1, 1, 2, 4, 8, 5)) == [0, 1, 0, 1, 0, 2, 0, 4, 0, 8, 0, 5]
    assert build_first_row((1, 0)) == [0, 1, 0, 0]


def test_rows_match_displayed_matrix():
    assert row_of(N7, 0) == DISPLAYED_10[0]
    assert row_of(N7, 1) == [3, 0, 2, 0, 1, 0, 2, 0, 5, 0]
    assert row_of(N7, 9) == [2, 0, 1, 0, 2, 0, 5, 0, 3, 0]
    assert N7.dense() == DISPLAYED_10
    with pytest.raises(NhtError):
        row_of(N7, 10)


def test_displayed_12_point_matrix_row_order():
    M = NhtMatrix(12, 29, (14, 28, 18, 27, 23, 7))
    assert M.row(1) == [7, 0, 14, 0, 28, 0, 18, 0, 27, 0, 23, 0]
    assert M.row(11) == [14, 0, 28, 0, 18, 0, 27, 0, 23, 0, 7, 0]


def test_columns_are_transpose_rows():
    dense = N7.dense()
    for j in range(10):
        assert N7.column(j) == [dense[i][j] for i in range(10)]


def test_gram_examples():
    assert is_identity(gram(N7), 7)
    assert is_identity(gram(NhtMatrix(4, 5, (1, 0))), 5)
    bad = gram(NhtMatrix(12, 29, (14, 18, 28, 27, 7, 23)))
    assert not is_identity(bad, 29)
    # Lag-4 entry of the caption ordering is 3; the displayed ordering gives 12.
    assert bad[0][4] == 3 and bad[0][2] == 9
    displayed = gram(NhtMatrix(12, 29, (14, 28, 18, 27, 23, 7)))
    assert displayed[0][4] == 12 and not is_identity(displayed, 29)


def test_is_identity_edge_cases():
    assert is_identity([[1 if i == j else 0 for j in range(10)] for i in range(10)], 7)
    assert not is_identity([[0] * 4 for _ in range(4)], 5)
    assert not is_identity([], 5)


def test_matrix_validation():
    with pytest.raises(InvalidCoefficientsError):
        NhtMatrix(10, 7, (1, 2, 3))
    with pytest.raises(InvalidCoefficientsError):
        NhtMatrix(9, 7, (1, 2, 3, 4))
    with pytest.raises(InvalidCoefficientsError):
        NhtMatrix(4, 7, (7, 0))


def test_dense_bound():
    big = NhtMatrix(66, 5, tuple([1] + [0] * 32))
    with pytest.raises(NhtError):
        gram(big)
    assert is_identity(gram(big, dense_bound=66), 5)


matrices = st.integers(2, 8).flatmap(
    lambda h: st.integers(2, 200).flatmap(
        lambda m: st.lists(st.integers(0, m - 1), min_size=h, max_size=h).map(
            lambda u: NhtMatrix(2 * len(u), m, tuple(u)))))


@given(matrices)
def test_gram_structure(N):
    g = gram(N)
    assert g == dense_gram(N.coeffs, N.m)
    for j in range(N.n):
        for l in range(N.n):
            assert g[j][l] == g[l][j]
            if (j - l) % 2:
                assert g[j][l] == 0
    assert N.dense() == dense_matrix(N.coeffs)


@pytest.mark.parametrize("h, m", [(h, m) for h in (2, 3) for m in range(2, 8)])
def test_identity_iff_check_full_space(h, m):
    for u in itertools.product(range(m), repeat=h):
        N = NhtMatrix(2 * h, m, u)
        assert is_identity(gram(N), m) == check_solution(u, m).passed


@pytest.mark.parametrize("h, m", [(5, 7), (5, 13), (6, 11), (6, 13)])
def test_identity_iff_check_random_samples(h, m):
    rng = random.Random(1000 * h + m)
    for _ in range(10_000):
        u = tuple(rng.randrange(m) for _ in range(h))
        assert is_identity(gram(NhtMatrix(2 * h, m, u)), m) == check_solution(u, m).passed


@pytest.mark.parametrize("m", [5, 7, 11, 13])
def test_check_matches_10_point_formulas(m):
    for u in itertools.product(range(m), repeat=5):
        assert check_solution(u, m).passed == formula_10(u, m)


@pytest.mark.parametrize("m", [2, 3, 5, 7])
def test_check_matches_12_point_formulas(m):
    for u in itertools.product(range(m), repeat=6):
        assert check_solution(u, m).passed == formula_12(u, m)


def test_formula_oracles_agree_with_dense():
    for u in itertools.product(range(5), repeat=5):
        assert formula_10(u, 5) == dense_ok(u, 5)
    for u in itertools.product(range(3), repeat=6):
        assert formula_12(u, 3) == dense_ok(u, 3)
