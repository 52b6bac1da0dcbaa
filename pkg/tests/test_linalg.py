from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from ielie.linalg import RationalMatrix, RowReducer, null_space, rank, rref
from oracles import rank_by_elimination


def test_rref_examples():
    m, piv = rref(RationalMatrix.identity(2))
    assert m.to_rows() == [[1, 0], [0, 1]] and piv == [0, 1]
    m, piv = rref([[1, 1], [1, 1]])
    assert m.to_rows() == [[1, 1], [0, 0]] and piv == [0]
    m, piv = rref([[0, 2]])
    assert m.to_rows() == [[0, 1]] and piv == [1]


def test_rank_examples():
    assert rank(RationalMatrix.identity(3)) == 3
    assert rank(RationalMatrix.zeros(2, 5)) == 0
    assert rank([[1, 2], [2, 4]]) == 1


def test_null_space_examples():
    (v,) = null_space([[1, 1]])
    assert v[0] == -v[1] != 0
    assert null_space(RationalMatrix.identity(2)) == []
    assert len(null_space(RationalMatrix.zeros(1, 2))) == 2


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        RationalMatrix.from_rows([[1, 2], [3]])


def _random_matrix(rng, rows, cols):
    dense = rng.integers(-3, 4, size=(rows, cols)) * (rng.random((rows, cols)) < 0.4)
    return [[Fraction(int(x), int(rng.integers(1, 4))) for x in row] for row in dense]


@pytest.mark.parametrize("trial", range(40))
def test_rank_nullity(trial):
    rng = np.random.default_rng(trial)
    rows, cols = (int(x) for x in rng.integers(1, 21, size=2))
    m = _random_matrix(rng, rows, cols)
    r = rank(m)
    kernel = null_space(m)
    assert r == rank_by_elimination(m)
    assert r + len(kernel) == cols
    mat = RationalMatrix.from_rows(m)
    for v in kernel:
        assert all(x == 0 for x in mat.apply(v))


@pytest.mark.parametrize("trial", range(20))
def test_row_reducer_matches_dense(trial):
    rng = np.random.default_rng(1000 + trial)
    rows, cols = (int(x) for x in rng.integers(1, 16, size=2))
    m = _random_matrix(rng, rows, cols)
    red = RowReducer(cols)
    for row in m:
        red.add({j: x for j, x in enumerate(row) if x})
    assert red.rank == rank(m)
    assert len(red.null_space()) == len(null_space(m))
    for row in m:
        assert red.contains({j: x for j, x in enumerate(row) if x})
