# -*- coding: utf-8 -*-

"""Tests for `disjointmeter/lattice`."""

import pytest

from disjointmeter.exceptions import (
    DimensionMismatch,
    NotCoprime,
    NotPrimitive,
    NotSquare,
    NotUnimodular,
    TrivialKernel,
)
from disjointmeter.lattice import (
    IntMatrix,
    as_unimodular,
    bezout,
    block_diagonal,
    complete_to_unimodular,
    det,
    ext_gcd,
    kernel_primitive_vector,
    mat_sub,
    mat_vec,
    matmul,
    matrix_power,
    primitive,
    submatrix,
    unimodular_inverse,
    vector_gcd,
)
from disjointmeter.rng import SplitMix64


def test_ext_gcd():
    g, x, y = ext_gcd(240, 46)
    assert g == 2
    assert 240 * x + 46 * y == 2
    g, x, y = ext_gcd(-4, 6)
    assert g == 2
    assert -4 * x + 6 * y == 2
    assert ext_gcd(0, 0)[0] == 0


def test_bezout():
    assert bezout(3, 2) == (1, 1)
    r, s = bezout(7, 5)
    assert 7 * r - 5 * s == 1
    assert 0 <= s < 7
    assert bezout(1, 0) == (1, 0)
    rng = SplitMix64(11)
    for _ in range(200):
        p, q = rng.randint(-100, 100), rng.randint(-100, 100)
        if vector_gcd([p, q]) != 1:
            with pytest.raises(NotCoprime):
                bezout(p, q)
            continue
        r, s = bezout(p, q)
        assert p * r - q * s == 1
        if abs(p) > 1:
            assert 0 <= s < abs(p)


def test_int_matrix():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.rows == 2 and m.cols == 2
    assert m.column(1) == (2, 4)
    assert m.transpose().entries == ((1, 3), (2, 4))
    assert (-m).entries == ((-1, -2), (-3, -4))
    assert (m @ IntMatrix.identity(2)) == m
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        matmul(m, IntMatrix.identity(3))
    with pytest.raises(DimensionMismatch):
        mat_vec(m, (1, 2, 3))


def test_products():
    J = IntMatrix.from_rows([[1, 1], [0, 1]])
    assert matrix_power(J, 0) == IntMatrix.identity(2)
    assert matrix_power(J, 5).entries == ((1, 5), (0, 1))
    block = block_diagonal(IntMatrix.identity(1), J)
    assert block.entries == ((1, 0, 0), (0, 1, 1), (0, 0, 1))
    assert submatrix(block, 1) == J


def test_det():
    assert det(IntMatrix.from_rows([[2, 1], [1, 1]])) == 1
    assert det(IntMatrix.from_rows([[1, 2, 3], [0, 1, 4], [5, 6, 0]])) == 1
    assert det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    big = 10 ** 40
    assert det(IntMatrix.from_rows([[big + 1, big], [1, 1]])) == 1
    with pytest.raises(NotSquare):
        det(IntMatrix.from_rows([[1, 2, 3]]))


def _cofactor_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, entry in enumerate(rows[0]):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * entry * _cofactor_det(minor)
    return total


def _random_matrix(rng, d, bound=9):
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(d)]
    )


def test_det_cofactor_expansion():
    rng = SplitMix64(17)
    for trial in range(60):
        m = _random_matrix(rng, 1 + trial % 5)
        assert det(m) == _cofactor_det(m.tolist()), m


def test_det_is_multiplicative():
    rng = SplitMix64(23)
    for trial in range(100):
        d = 1 + trial % 5
        m, n = _random_matrix(rng, d), _random_matrix(rng, d)
        assert det(matmul(m, n)) == det(m) * det(n)


def test_unimodular_inverse():
    m = IntMatrix.from_rows([[1, 2, 3], [0, 1, 4], [5, 6, 0]])
    inverse = unimodular_inverse(m)
    assert inverse.determinant == 1
    assert matmul(m, inverse.matrix) == IntMatrix.identity(3)
    assert as_unimodular(m).dimension == 3
    with pytest.raises(NotUnimodular):
        as_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))


def _random_elementary_product(rng, d, steps=12):
    rows = IntMatrix.identity(d).tolist()
    for _ in range(steps):
        i, j = rng.randint(0, d - 1), rng.randint(0, d - 1)
        move = rng.randint(0, 2)
        if move == 0 and i != j:
            k = rng.randint(-4, 4)
            rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
        elif move == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-_ for _ in rows[i]]
    return IntMatrix.from_rows(rows)


def test_unimodular_inverse_random():
    rng = SplitMix64(31)
    for trial in range(100):
        d = 1 + trial % 5
        m = _random_elementary_product(rng, d)
        inverse = unimodular_inverse(m)
        assert inverse.determinant == det(m)
        assert matmul(m, inverse.matrix) == IntMatrix.identity(d)
        assert matmul(inverse.matrix, m) == IntMatrix.identity(d)
        assert unimodular_inverse(inverse).matrix == m


def test_primitive():
    assert primitive((-2, 4, 6)) == (1, -2, -3)
    assert primitive((0, 0)) == (0, 0)
    assert primitive((0, -3, 9)) == (0, 1, -3)


def test_kernel_primitive_vector():
    assert kernel_primitive_vector(IntMatrix.from_rows([[0, 1], [0, 0]])) == (1, 0)
    assert kernel_primitive_vector(IntMatrix.from_rows([[2, -4], [1, -2]])) == (2, 1)
    with pytest.raises(TrivialKernel):
        kernel_primitive_vector(IntMatrix.identity(3))
    with pytest.raises(NotSquare):
        kernel_primitive_vector(IntMatrix.from_rows([[1, 2]]))


def test_kernel_primitive_vector_examples():
    assert kernel_primitive_vector(IntMatrix.zeros(3, 3)) == (1, 0, 0)
    A = IntMatrix.from_rows([[1, 2, 3], [0, 1, 4], [0, 0, 1]])
    assert kernel_primitive_vector(mat_sub(A, IntMatrix.identity(3))) == (1, 0, 0)


def test_kernel_primitive_vector_random():
    rng = SplitMix64(29)
    for trial in range(150):
        d = 2 + trial % 4
        rows = _random_matrix(rng, d).tolist()
        # last row is an integer combination of the others
        rows[-1] = [0] * d
        for row in rows[:-1]:
            k = rng.randint(-3, 3)
            rows[-1] = [x + k * y for x, y in zip(rows[-1], row)]
        m = IntMatrix.from_rows(rows)
        v = kernel_primitive_vector(m)
        assert all(_ == 0 for _ in mat_vec(m, v)), m
        assert vector_gcd(v) == 1


def test_complete_to_unimodular():
    for v in [(3, 5), (1, 0, 0), (6, 10, 15), (0, 0, 1), (-4, 9, 2, 7)]:
        completion = complete_to_unimodular(v)
        assert completion.determinant == 1
        assert det(completion.matrix) == 1
        assert completion.matrix.column(0) == v
    with pytest.raises(NotPrimitive):
        complete_to_unimodular((2, 4))
    with pytest.raises(NotPrimitive):
        complete_to_unimodular((-1,))


def test_complete_to_unimodular_random():
    rng = SplitMix64(5)
    for _ in range(200):
        d = rng.randint(2, 5)
        v = [rng.randint(-20, 20) for _ in range(d)]
        if vector_gcd(v) != 1:
            continue
        completion = complete_to_unimodular(v)
        assert det(completion.matrix) == 1
        assert completion.matrix.column(0) == tuple(v)
