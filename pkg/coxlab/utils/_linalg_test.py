from fractions import Fraction

import numpy as np
import pytest

from ._linalg import (
    EchelonBasis, bareiss_det, char_poly_coefficients, integer_dets, integer_roots, interpolate,
    null_space, object_array, rank)


def test_char_poly_coefficients_diagonal():
    A = object_array([[2, 0], [0, 3]])
    assert char_poly_coefficients(A) == [6, -5, 1]


def test_char_poly_coefficients_rational():
    A = object_array([[Fraction(1, 2), 1], [1, 0]])
    # det(x - A) = x^2 - x/2 - 1
    assert char_poly_coefficients(A) == [-1, Fraction(-1, 2), 1]


@pytest.mark.parametrize('rows,expected', [
    ([[1, 2], [3, 4]], -2),
    ([[0, 1], [1, 0]], -1),
    ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 4),
    ([[1, 2], [2, 4]], 0),
])
def test_bareiss_det(rows, expected):
    assert bareiss_det(rows) == expected


def test_integer_dets():
    rng = np.random.default_rng(13)
    stack = rng.integers(-3, 4, size=(200, 4, 4))
    stack[:20, :, 0] = 0
    stack[20:40, 0, 0] = 0
    stack[40:60, 3] = 2 * stack[40:60, 1]
    expected = [int(bareiss_det(M)) for M in stack]
    np.testing.assert_array_equal(integer_dets(stack), expected)
    assert integer_dets(np.zeros((3, 0, 0), dtype=int)).tolist() == [1, 1, 1]
    with pytest.raises(ValueError):
        integer_dets(np.zeros((2, 3, 2)))


def test_echelon_basis():
    basis = EchelonBasis([[1, 1, 0], [0, 1, 1]])
    assert basis.rank == 2
    assert basis.contains([1, 0, -1])
    assert not basis.contains([0, 0, 1])
    assert not basis.add([2, 2, 0])
    assert basis.add([0, 0, 1])
    assert rank([[1, 2], [2, 4], [0, 0]]) == 1


def test_null_space():
    (v,) = null_space([[1, 1, 0], [0, 1, 1]], 3)
    assert v == [1, -1, 1]


def test_integer_roots():
    # (x - 2)^2 (x + 1) = x^3 - 3x^2 + 4
    coeffs = [4, 0, -3, 1]
    roots, rest = integer_roots(coeffs, range(-3, 4))
    assert sorted(roots) == [-1, 2, 2]
    assert rest == [1]


def test_integer_roots_leftover():
    roots, rest = integer_roots([1, 0, 1], range(-3, 4))  # x^2 + 1
    assert roots == []
    assert rest == [1, 0, 1]


def test_interpolate():
    # 1 - 2x + 3x^2
    xs = [0, 1, 2]
    ys = [1 - 2 * x + 3 * x * x for x in xs]
    assert interpolate(xs, ys) == [1, -2, 3]
