# -*- coding: utf-8 -*-
"""
Conjugation of unipotent integer matrices to upper-triangular normal form.

A square integer matrix A with determinant +1 or -1 whose only eigenvalue is
+1 (or -1) is conjugate over GL(d, Z) to an upper-triangular matrix with
that eigenvalue on the diagonal. The construction is inductive: a primitive
fixed vector of A is completed to a unimodular basis, the first column of the
conjugated matrix becomes e1 and the lower-right block is handled the same
way.
"""

from fractions import Fraction
import logging

from disjointmeter.exceptions import (
    AlreadyTriangular,
    NotSquare,
    NotUnipotent,
    NotUnimodular,
    ValidationError,
    WrongDimension,
    check_invariant,
)
from disjointmeter.lattice import (
    IntMatrix,
    as_unimodular,
    bezout,
    block_diagonal,
    complete_to_unimodular,
    det,
    kernel_primitive_vector,
    mat_sub,
    matmul,
    matrix_power,
    scalar_identity,
    submatrix,
    unimodular_inverse,
)
from disjointmeter.rng import SplitMix64
from .types import TriangularForm, UnipotentCertificate

logger = logging.getLogger(__name__)

__all__ = [
    "check_unipotent",
    "is_upper_unipotent",
    "parabolic_conjugator",
    "parabolic_fixed_point",
    "random_unipotent",
    "triangularize",
]


def check_unipotent(A):
    """
    Find the single eigenvalue of a (negative-)unipotent matrix.

    Parameters
    ----------
    A: IntMatrix

    Returns
    -------
    UnipotentCertificate
        sign s with ``(A - s*I)**d == 0``

    Raises
    ------
    NotSquare, NotUnimodular, NotUnipotent
    """
    if not A.is_square:
        raise NotSquare("expected a square matrix, got %dx%d" % (A.rows, A.cols))
    determinant = det(A)
    if determinant not in (1, -1):
        raise NotUnimodular("determinant is %s" % determinant)
    d = A.rows
    for sign in (1, -1):
        nilpotent = mat_sub(A, scalar_identity(d, sign))
        if all(_ == 0 for row in matrix_power(nilpotent, d).entries for _ in row):
            return UnipotentCertificate(sign=sign, dimension=d)
    raise NotUnipotent("matrix has an eigenvalue other than +1 or -1")


def is_upper_unipotent(B, sign=1):
    """bool: B is upper triangular with every diagonal entry equal to sign."""
    return B.is_square and all(
        (value == sign) if i == j else (value == 0 or j > i)
        for i, row in enumerate(B.entries)
        for j, value in enumerate(row)
    )


# ---------- 2x2 parabolic route ----------


def parabolic_fixed_point(A):
    """
    Fixed direction ``p/q`` of a 2x2 unipotent matrix ``[[a, b], [c, d]]``.

    ``p/q = (a - d) / 2c`` in lowest terms with ``q > 0``; ``(p, q)`` spans
    the kernel of ``A - I``.

    Raises
    ------
    WrongDimension, NotUnipotent, AlreadyTriangular
    """
    if A.rows != 2 or A.cols != 2:
        raise WrongDimension("parabolic fixed point needs a 2x2 matrix")
    if check_unipotent(A).sign != 1:
        raise NotUnipotent("parabolic fixed point needs eigenvalue +1")
    (a, _), (c, d) = A.entries
    if c == 0:
        raise AlreadyTriangular("lower-left entry is 0")
    direction = Fraction(a - d, 2 * c)
    return direction.numerator, direction.denominator


def parabolic_conjugator(A):
    """
    Normal form of a 2x2 unipotent matrix through its fixed point.

    With ``(p, q)`` the fixed point and ``p*r - q*s = 1`` the canonical
    Bezout pair, ``P = [[p, s], [q, r]]`` has determinant 1 and
    ``P**-1 A P = [[1, t], [0, 1]]``.

    Returns
    -------
    TriangularForm
    """
    p, q = parabolic_fixed_point(A)
    r, s = bezout(p, q)
    P = as_unimodular(IntMatrix.from_rows([[p, s], [q, r]]))
    B = matmul(matmul(unimodular_inverse(P).matrix, A), P.matrix)
    check_invariant(is_upper_unipotent(B), "parabolic form of %s" % (A,))
    return TriangularForm(P=P, B=B, sign=1)


# ---------- general dimension ----------


def _triangularize_unipotent(M, level=0):
    """Return (P, B) with det P = 1 for a +1-unipotent M."""
    d = M.rows
    if d == 1:
        return IntMatrix.identity(1), M
    v = kernel_primitive_vector(mat_sub(M, IntMatrix.identity(d)))
    P1 = complete_to_unimodular(v).matrix
    C = matmul(matmul(unimodular_inverse(P1).matrix, M), P1)
    logger.debug("level %d: fixed vector %s", level, v)
    P_tail, _ = _triangularize_unipotent(submatrix(C, 1), level + 1)
    P = matmul(P1, block_diagonal(IntMatrix.identity(1), P_tail))
    B = matmul(matmul(unimodular_inverse(P).matrix, M), P)
    return P, B


def triangularize(A):
    """
    Upper-triangular normal form of a (negative-)unipotent matrix.

    Works on ``sign * A``, which is unipotent, and negates the result for
    sign -1. The output is a pure function of A.

    Parameters
    ----------
    A: IntMatrix

    Returns
    -------
    TriangularForm

    Raises
    ------
    NotSquare, NotUnimodular, NotUnipotent
    """
    certificate = check_unipotent(A)
    M = A if certificate.sign == 1 else -A
    P, B = _triangularize_unipotent(M)
    if certificate.sign == -1:
        B = -B
    form = TriangularForm(P=as_unimodular(P), B=B, sign=certificate.sign)
    check_invariant(form.P.determinant == 1, "det P = %s" % form.P.determinant)
    check_invariant(is_upper_unipotent(B, certificate.sign), "B = %s" % (B,))
    logger.debug("triangularized %dx%d matrix, sign %d", A.rows, A.rows, form.sign)
    return form


# ---------- instance generator ----------


def random_unipotent(d, seed, bound):
    """
    Random unipotent integer matrix ``Q U Q**-1``.

    U is upper unipotent with entries above the diagonal in
    ``[-bound, bound]``; Q is a product of at most 2d elementary matrices
    ``I + k E_ij``. The result depends only on the arguments.

    Raises
    ------
    ValidationError
        d < 2 or bound < 0.
    """
    if d < 2 or bound < 0:
        raise ValidationError("random_unipotent needs d >= 2 and bound >= 0")
    rng = SplitMix64(seed)
    U = IntMatrix.identity(d).tolist()
    for i in range(d):
        for j in range(i + 1, d):
            U[i][j] = rng.randint(-bound, bound)
    Q = IntMatrix.identity(d)
    Q_inverse = IntMatrix.identity(d)
    step = max(bound, 1)
    for _ in range(rng.randint(1, 2 * d)):
        i = rng.randint(0, d - 1)
        j = rng.randint(0, d - 2)
        j += j >= i
        k = rng.randint(1, step) * rng.choice((1, -1))
        E = IntMatrix.identity(d).tolist()
        E[i][j] = k
        E_inverse = IntMatrix.identity(d).tolist()
        E_inverse[i][j] = -k
        Q = matmul(Q, IntMatrix.from_rows(E))
        Q_inverse = matmul(IntMatrix.from_rows(E_inverse), Q_inverse)
    return matmul(matmul(Q, IntMatrix.from_rows(U)), Q_inverse)
