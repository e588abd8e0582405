import pytest
from hypothesis import given

from conftest import symmetric_matrices
from gmk import BitMatrix
from gmk.errors import NonzeroDiagonal, NotSymmetric


def test_validation():
    with pytest.raises(NonzeroDiagonal):
        BitMatrix.from_lists([[1, 0], [0, 0]])
    with pytest.raises(NotSymmetric):
        BitMatrix.from_lists([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        BitMatrix.from_lists([[0, 1], [1, 0], [0, 0]])


def test_scalar_product_multiset():
    m = BitMatrix.from_lists([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert m.scalar_product((0, 1)) == 1
    assert m.scalar_product((0, 0)) == 2
    assert m.scalar_product((0, 1), mod2=True) == 1
    with pytest.raises(IndexError):
        m.scalar_product((0, 5))
    with pytest.raises(IndexError):
        m.scalar_product(())


@given(symmetric_matrices())
def test_json_round_trip(matrix):
    assert BitMatrix.from_json(matrix.to_json()) == matrix


@given(symmetric_matrices(min_size=2, max_size=5))
def test_permuted_reverses(matrix):
    order = list(reversed(range(matrix.size)))
    assert matrix.permuted(order).permuted(order) == matrix
