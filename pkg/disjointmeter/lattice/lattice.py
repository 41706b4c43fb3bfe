# -*- coding: utf-8 -*-
"""
Exact integer linear algebra.

Bezout pairs, Bareiss determinants, inverses of unimodular matrices,
primitive kernel vectors and unimodular completions. Everything is computed
with Python integers and :class:`fractions.Fraction`, so there is no overflow
and no rounding.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
import logging

from disjointmeter.exceptions import (
    ComputationError,
    DimensionMismatch,
    NotCoprime,
    NotPrimitive,
    NotSquare,
    NotUnimodular,
    TrivialKernel,
    check_invariant,
)
from .types import IntMatrix, UnimodularMatrix

logger = logging.getLogger(__name__)

__all__ = [
    "as_unimodular",
    "bezout",
    "block_diagonal",
    "complete_to_unimodular",
    "det",
    "ext_gcd",
    "kernel_primitive_vector",
    "mat_mul_rows",
    "mat_sub",
    "mat_vec",
    "matmul",
    "matrix_power",
    "primitive",
    "rational_inverse_rows",
    "scalar_identity",
    "submatrix",
    "unimodular_inverse",
    "vector_gcd",
]


# ---------- gcd ----------


def ext_gcd(a, b):
    """
    Extended Euclidean algorithm.

    Returns
    -------
    (int, int, int)
        ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y = g``.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def bezout(p, q):
    """
    Bezout pair ``(r, s)`` with ``p*r - q*s = 1``.

    When ``|p| > 1`` the pair is canonical: ``0 <= s < |p|``.

    Raises
    ------
    NotCoprime
        gcd(p, q) is not 1.
    """
    g, x, y = ext_gcd(p, q)
    if g != 1:
        raise NotCoprime("gcd(%s, %s) = %s" % (p, q, g))
    r, s = x, -y
    if abs(p) > 1:
        s %= abs(p)
        r = (1 + q * s) // p
    check_invariant(p * r - q * s == 1, "bezout pair of (%s, %s)" % (p, q))
    return r, s


def vector_gcd(v):
    """int: gcd of all entries (0 for the zero vector)."""
    return reduce(gcd, v, 0)


# ---------- products ----------


def matmul(m, n):
    """Product of two IntMatrix."""
    if m.cols != n.rows:
        raise DimensionMismatch(
            "cannot multiply %dx%d by %dx%d" % (m.rows, m.cols, n.rows, n.cols)
        )
    return IntMatrix.from_rows(mat_mul_rows(m.entries, n.entries))


def mat_mul_rows(a, b):
    """Product of two row lists with any exact scalar type."""
    columns = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in columns] for row in a]


def mat_vec(m, v):
    """tuple: ``m @ v`` for an IntMatrix and a vector of exact scalars."""
    if m.cols != len(v):
        raise DimensionMismatch(
            "matrix has %d columns, vector %d entries" % (m.cols, len(v))
        )
    return tuple(sum(a * x for a, x in zip(row, v)) for row in m.entries)


def mat_sub(m, n):
    return IntMatrix.from_rows(
        [[a - b for a, b in zip(r, s)] for r, s in zip(m.entries, n.entries)]
    )


def scalar_identity(d, value):
    return IntMatrix.from_rows(
        [[value if i == j else 0 for j in range(d)] for i in range(d)]
    )


def matrix_power(m, k):
    """``m**k`` for k >= 0 by repeated squaring."""
    result = IntMatrix.identity(m.rows)
    base = m
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def block_diagonal(head, tail):
    """Block matrix ``diag(head, tail)`` of two square IntMatrix."""
    size = head.rows + tail.rows
    rows = [[0] * size for _ in range(size)]
    for i, row in enumerate(head.entries):
        rows[i][: head.cols] = row
    for i, row in enumerate(tail.entries):
        rows[head.rows + i][head.cols :] = row
    return IntMatrix.from_rows(rows)


def submatrix(m, start):
    """Lower-right square block of m starting at (start, start)."""
    return IntMatrix.from_rows([row[start:] for row in m.entries[start:]])


# ---------- determinants and inverses ----------


def det(m):
    """
    Exact determinant by Bareiss fraction-free elimination.

    Raises
    ------
    NotSquare
    """
    if not m.is_square:
        raise NotSquare("determinant of a %dx%d matrix" % (m.rows, m.cols))
    n = m.rows
    a = m.tolist()
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def as_unimodular(m):
    """
    Wrap a square IntMatrix as UnimodularMatrix.

    Raises
    ------
    NotSquare, NotUnimodular
    """
    if isinstance(m, UnimodularMatrix):
        return m
    d = det(m)
    if d not in (1, -1):
        raise NotUnimodular("determinant is %s" % d)
    return UnimodularMatrix(matrix=m, determinant=d)


def rational_inverse_rows(rows):
    """Gauss-Jordan inverse of a square row list over the rationals."""
    n = len(rows)
    a = [
        [Fraction(_) for _ in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise ComputationError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        scale = a[col][col]
        a[col] = [_ / scale for _ in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def unimodular_inverse(m):
    """
    Exact integer inverse of a unimodular matrix.

    Parameters
    ----------
    m: UnimodularMatrix or IntMatrix

    Returns
    -------
    UnimodularMatrix
    """
    m = as_unimodular(m)
    inverse = rational_inverse_rows(m.matrix.entries)
    check_invariant(
        all(_.denominator == 1 for row in inverse for _ in row),
        "inverse of a unimodular matrix is not integral",
    )
    return UnimodularMatrix(
        matrix=IntMatrix.from_rows([[int(_) for _ in row] for row in inverse]),
        determinant=m.determinant,
    )


# ---------- kernels and completions ----------


def _echelon(m):
    """
    Integer reduced echelon form.

    Pivot order: leftmost column with a nonzero entry among the unused rows,
    smallest row index. Rows are kept primitive to bound entry growth.

    Returns
    -------
    (list of list of int, list of (int, int))
        Reduced rows and ``(row, column)`` of each pivot.
    """
    a = m.tolist()
    pivots = []
    row = 0
    for col in range(m.cols):
        pivot = next((i for i in range(row, m.rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        for i in range(m.rows):
            if i != row and a[i][col] != 0:
                factor, lead = a[i][col], a[row][col]
                a[i] = [lead * x - factor * y for x, y in zip(a[i], a[row])]
                content = vector_gcd(a[i])
                if content > 1:
                    a[i] = [_ // content for _ in a[i]]
        pivots.append((row, col))
        row += 1
        if row == m.rows:
            break
    return a, pivots


def primitive(v):
    """Divide v by its content and make the first nonzero entry positive."""
    content = vector_gcd(v)
    if content == 0:
        return tuple(v)
    v = [_ // content for _ in v]
    lead = next(_ for _ in v if _ != 0)
    if lead < 0:
        v = [-_ for _ in v]
    return tuple(v)


def kernel_primitive_vector(m):
    """
    Canonical primitive integer vector in the kernel of m.

    The vector belongs to the first free column of the reduced echelon form;
    denominators are cleared, the content is divided out and the first
    nonzero entry is positive.

    Raises
    ------
    NotSquare, TrivialKernel
    """
    if not m.is_square:
        raise NotSquare("kernel_primitive_vector expects a square matrix")
    rows, pivots = _echelon(m)
    pivot_columns = {col: row for row, col in pivots}
    free = [col for col in range(m.cols) if col not in pivot_columns]
    if not free:
        raise TrivialKernel("kernel of the matrix is {0}")
    f = free[0]
    solution = [Fraction(0)] * m.cols
    solution[f] = Fraction(1)
    for col, row in pivot_columns.items():
        solution[col] = Fraction(-rows[row][f], rows[row][col])
    scale = reduce(
        lambda x, y: x * y // gcd(x, y), (_.denominator for _ in solution), 1
    )
    v = primitive([int(_ * scale) for _ in solution])
    check_invariant(all(_ == 0 for _ in mat_vec(m, v)), "M v != 0 for v = %s" % (v,))
    return v


def _row_reduce_to_first_axis(v):
    """
    Unimodular U with ``U v = e1`` built from extended-gcd row operations.

    Returns
    -------
    list of list of int
    """
    d = len(v)
    w = list(v)
    u = [[int(i == j) for j in range(d)] for i in range(d)]
    for i in range(d - 1, 0, -1):
        a, b = w[0], w[i]
        if b == 0:
            continue
        g, x, y = ext_gcd(a, b)
        # [[x, y], [-b/g, a/g]] has determinant 1 and sends (a, b) to (g, 0)
        bg, ag = b // g, a // g
        u[0], u[i] = (
            [x * p + y * q for p, q in zip(u[0], u[i])],
            [-bg * p + ag * q for p, q in zip(u[0], u[i])],
        )
        w[0], w[i] = g, 0
    if w[0] == -1:
        u[0] = [-_ for _ in u[0]]
        w[0] = 1
    check_invariant(w[0] == 1, "row reduction of %s ended at %s" % (v, w[0]))
    return u


def complete_to_unimodular(v):
    """
    Unimodular matrix with first column v and determinant +1.

    When ``v[0]`` and ``v[1]`` are coprime the classical completion
    ``[[v1, s, 0, ...], [v2, r, 0, ...], [v3, 0, 1, ...], ...]`` with the
    canonical Bezout pair ``v1*r - v2*s = 1`` is returned. Every other
    primitive vector is completed through extended-gcd row reduction.

    Raises
    ------
    NotPrimitive
        gcd of the entries is not 1.
    """
    v = tuple(int(_) for _ in v)
    d = len(v)
    if vector_gcd(v) != 1:
        raise NotPrimitive("gcd of %s is %s" % (v, vector_gcd(v)))
    if d == 1:
        if v[0] != 1:
            raise NotPrimitive("no 1x1 completion of %s with determinant +1" % (v,))
        return as_unimodular(IntMatrix.identity(1))
    if gcd(v[0], v[1]) == 1:
        r, s = bezout(v[0], v[1])
        rows = [[int(i == j) for j in range(d)] for i in range(d)]
        for i in range(d):
            rows[i][0] = v[i]
        rows[0][1], rows[1][1] = s, r
        result = as_unimodular(IntMatrix.from_rows(rows))
    else:
        logger.debug("general completion of %s", v)
        u = _row_reduce_to_first_axis(v)
        result = unimodular_inverse(IntMatrix.from_rows(u))
        if result.determinant == -1:
            rows = result.matrix.tolist()
            for row in rows:
                row[1] = -row[1]
            result = as_unimodular(IntMatrix.from_rows(rows))
    check_invariant(
        result.determinant == 1 and result.matrix.column(0) == v,
        "completion of %s" % (v,),
    )
    return result
