# -*- coding: utf-8 -*-

"""Tests for `disjointmeter/dynamics/triangularize.py`."""

import pytest

from disjointmeter.dynamics import (
    check_unipotent,
    is_upper_unipotent,
    parabolic_conjugator,
    parabolic_fixed_point,
    random_unipotent,
    triangularize,
)
from disjointmeter.exceptions import (
    AlreadyTriangular,
    NotSquare,
    NotUnimodular,
    NotUnipotent,
    ValidationError,
    WrongDimension,
)
from disjointmeter.lattice import (
    IntMatrix,
    kernel_primitive_vector,
    mat_sub,
    mat_vec,
    matmul,
    unimodular_inverse,
)
from disjointmeter.rng import SplitMix64


def _is_normal_form(A, form):
    P_inverse = unimodular_inverse(form.P).matrix
    return (
        form.P.determinant == 1
        and is_upper_unipotent(form.B, form.sign)
        and matmul(matmul(P_inverse, A), form.P.matrix) == form.B
    )


def test_check_unipotent():
    assert check_unipotent(IntMatrix.identity(3)).sign == 1
    assert check_unipotent(IntMatrix.from_rows([[2, 1], [-1, 0]])).sign == 1
    certificate = check_unipotent(IntMatrix.from_rows([[-1, 5], [0, -1]]))
    assert certificate.sign == -1
    assert certificate.dimension == 2
    with pytest.raises(NotUnipotent):
        check_unipotent(IntMatrix.from_rows([[2, 1], [1, 1]]))
    with pytest.raises(NotUnimodular):
        check_unipotent(IntMatrix.from_rows([[2, 0], [0, 1]]))
    with pytest.raises(NotSquare):
        check_unipotent(IntMatrix.from_rows([[1, 0, 0], [0, 1, 0]]))


def test_is_upper_unipotent():
    assert is_upper_unipotent(IntMatrix.from_rows([[1, 7], [0, 1]]))
    assert not is_upper_unipotent(IntMatrix.from_rows([[1, 0], [1, 1]]))
    assert is_upper_unipotent(IntMatrix.from_rows([[-1, 2], [0, -1]]), -1)
    assert not is_upper_unipotent(IntMatrix.from_rows([[-1, 2], [0, -1]]))


def test_triangularize_identity():
    form = triangularize(IntMatrix.identity(3))
    assert form.P.matrix == IntMatrix.identity(3)
    assert form.B == IntMatrix.identity(3)
    assert form.sign == 1


def test_triangularize_examples():
    A = IntMatrix.from_rows([[1, 0], [1, 1]])
    form = triangularize(A)
    assert _is_normal_form(A, form)
    A = IntMatrix.from_rows([[2, 1], [-1, 0]])
    assert _is_normal_form(A, triangularize(A))
    A = IntMatrix.from_rows([[-3, -4], [1, 1]])
    form = triangularize(A)
    assert form.sign == -1
    assert _is_normal_form(A, form)


def test_triangularize_is_deterministic():
    A = random_unipotent(4, 42, 3)
    assert triangularize(A) == triangularize(A)


def test_triangularize_random():
    """500 seeded instances in dimensions 2 to 6 with entry bound 3."""
    for i in range(500):
        d = 2 + i % 5
        A = random_unipotent(d, i, 3)
        assert _is_normal_form(A, triangularize(A)), A


def test_triangularize_negative_unipotent():
    for i in range(50):
        A = -random_unipotent(2 + i % 4, 1000 + i, 2)
        form = triangularize(A)
        assert form.sign == -1
        assert _is_normal_form(A, form), A


def test_triangularize_errors():
    with pytest.raises(NotUnipotent):
        triangularize(IntMatrix.from_rows([[2, 1], [1, 1]]))
    with pytest.raises(NotUnimodular):
        triangularize(IntMatrix.from_rows([[1, 1], [0, 2]]))


def test_parabolic_fixed_point():
    A = IntMatrix.from_rows([[1, 0], [1, 1]])
    assert parabolic_fixed_point(A) == (0, 1)
    A = IntMatrix.from_rows([[3, -2], [2, -1]])
    assert parabolic_fixed_point(A) == (1, 1)
    with pytest.raises(AlreadyTriangular):
        parabolic_fixed_point(IntMatrix.from_rows([[1, 4], [0, 1]]))
    with pytest.raises(WrongDimension):
        parabolic_fixed_point(IntMatrix.identity(3))
    with pytest.raises(NotUnipotent):
        parabolic_fixed_point(IntMatrix.from_rows([[-1, 0], [1, -1]]))


def test_parabolic_conjugator():
    A = IntMatrix.from_rows([[1, 0], [1, 1]])
    form = parabolic_conjugator(A)
    assert form.P.matrix.entries == ((0, -1), (1, 0))
    assert form.B.entries == ((1, -1), (0, 1))
    assert _is_normal_form(A, form)


def test_parabolic_cross_check():
    """Fixed point lies in the kernel of A - I, collinear with the kernel vector."""
    rng = SplitMix64(2)
    checked = 0
    while checked < 100:
        A = random_unipotent(2, rng.next_u64(), 3)
        if A.entries[1][0] == 0:
            continue
        p, q = parabolic_fixed_point(A)
        nilpotent = mat_sub(A, IntMatrix.identity(2))
        assert mat_vec(nilpotent, (p, q)) == (0, 0)
        k1, k2 = kernel_primitive_vector(nilpotent)
        assert p * k2 - q * k1 == 0
        assert _is_normal_form(A, parabolic_conjugator(A))
        checked += 1


def test_random_unipotent():
    A = random_unipotent(3, 7, 3)
    assert A == random_unipotent(3, 7, 3)
    assert check_unipotent(A).sign == 1
    with pytest.raises(ValidationError):
        random_unipotent(1, 7, 3)
    with pytest.raises(ValidationError):
        random_unipotent(3, 7, -1)
