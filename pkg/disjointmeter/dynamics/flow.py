# -*- coding: utf-8 -*-
"""
Affine flows ``T(x) = A x + a mod 1`` on the d-torus.

Rational data is handled exactly; float coordinates pass through the same
functions in double precision.
"""

from fractions import Fraction
import math

from disjointmeter.exceptions import (
    DimensionMismatch,
    EngineUnavailable,
    NotUnipotent,
    NotUnimodular,
    ValidationError,
    WrongDimension,
)
from disjointmeter.lattice import (
    as_unimodular,
    det,
    mat_mul_rows,
    mat_vec,
    matmul,
    unimodular_inverse,
)
from .triangularize import check_unipotent
from .types import AffineTorusFlow, FlowClass, TorusPoint

__all__ = [
    "apply",
    "classify_flow_2x2",
    "conjugate_flow",
    "is_affine_distal",
    "iterate",
    "iterate_closed_form",
    "pull_back",
    "push_forward",
]


def _check_dimension(flow, x):
    if flow.dimension != x.dimension:
        raise DimensionMismatch(
            "flow has dimension %d, point %d" % (flow.dimension, x.dimension)
        )


def apply(flow, x):
    """TorusPoint: ``A x + a mod 1``."""
    _check_dimension(flow, x)
    image = mat_vec(flow.A, x.coords)
    return TorusPoint.of(y + s for y, s in zip(image, flow.a.coords))


def iterate(flow, x, n):
    """
    TorusPoint: n-fold application of the flow.

    Raises
    ------
    ValidationError
        n is negative.
    DimensionMismatch
    """
    if n < 0:
        raise ValidationError("iterate needs n >= 0, got %s" % n)
    _check_dimension(flow, x)
    for _ in range(n):
        x = apply(flow, x)
    return x


def iterate_closed_form(flow, x, n):
    """
    ``A**n x + (A**(n-1) + ... + I) a mod 1`` by repeated squaring.

    Works on the homogeneous matrix ``[[A, a], [0, 1]]`` over the rationals
    and reduces only at the end.

    Raises
    ------
    ValidationError, DimensionMismatch
    EngineUnavailable
        Shift or point is not rational.
    """
    if n < 0:
        raise ValidationError("iterate needs n >= 0, got %s" % n)
    _check_dimension(flow, x)
    if not (flow.is_rational and x.is_rational):
        raise EngineUnavailable("closed form iteration needs rational data")
    d = flow.dimension
    base = [list(row) + [s] for row, s in zip(flow.A.entries, flow.a.coords)]
    base.append([0] * d + [1])
    result = [[Fraction(int(i == j)) for j in range(d + 1)] for i in range(d + 1)]
    while n:
        if n & 1:
            result = mat_mul_rows(result, base)
        base = mat_mul_rows(base, base)
        n >>= 1
    column = list(x.coords) + [1]
    return TorusPoint.of(
        sum(h * y for h, y in zip(row, column)) for row in result[:d]
    )


def push_forward(P, x):
    """TorusPoint: ``h(x) = P x mod 1`` for a unimodular P."""
    P = as_unimodular(P)
    if P.dimension != x.dimension:
        raise DimensionMismatch("matrix and point dimensions differ")
    return TorusPoint.of(mat_vec(P.matrix, x.coords))


def pull_back(P, x):
    """TorusPoint: ``h**-1(x) = P**-1 x mod 1``."""
    return push_forward(unimodular_inverse(P), x)


def conjugate_flow(flow, P):
    """
    Conjugate of a flow by the torus automorphism ``h(x) = P x``.

    Returns the flow ``T_{B,b}`` with ``B = P**-1 A P`` and
    ``b = P**-1 a mod 1``, so that ``T_{A,a}(h(x)) == h(T_{B,b}(x))``.

    Parameters
    ----------
    flow: AffineTorusFlow
    P: UnimodularMatrix or IntMatrix

    Raises
    ------
    NotUnimodular, DimensionMismatch
    """
    P = as_unimodular(P)
    if P.dimension != flow.dimension:
        raise DimensionMismatch(
            "flow has dimension %d, matrix %d" % (flow.dimension, P.dimension)
        )
    P_inverse = unimodular_inverse(P).matrix
    B = matmul(matmul(P_inverse, flow.A), P.matrix)
    b = TorusPoint.of(mat_vec(P_inverse, flow.a.coords))
    return AffineTorusFlow(A=B, a=b)


def is_affine_distal(flow):
    """bool: A is unipotent or negative-unipotent and the shift is nonzero."""
    try:
        check_unipotent(flow.A)
    except (NotUnipotent, NotUnimodular):
        return False
    return not flow.a.is_zero


def classify_flow_2x2(flow):
    """
    Eigenvalue trichotomy of a flow on the 2-torus.

    With trace t and determinant e (+1 or -1) of A:

    - ``e == 1`` and ``|t| > 2``, or ``e == -1`` and ``t != 0``: positive
      entropy, equal to the log of the spectral radius
      ``(|t| + sqrt(t**2 - 4e)) / 2``;
    - ``e == 1`` and ``t == +-2``: distal unipotent with sign ``t / 2``;
    - otherwise every eigenvalue lies on the unit circle and is not a
      repeated +-1: equicontinuous.

    Returns
    -------
    FlowClass

    Raises
    ------
    WrongDimension
    """
    if flow.dimension != 2:
        raise WrongDimension("classification needs d = 2, got %d" % flow.dimension)
    (a, _), (_, d) = flow.A.entries
    trace = a + d
    determinant = det(flow.A)
    if (determinant == 1 and abs(trace) > 2) or (determinant == -1 and trace != 0):
        radius = (abs(trace) + math.sqrt(trace * trace - 4 * determinant)) / 2
        return FlowClass(FlowClass.POSITIVE_ENTROPY, None, math.log(radius))
    if determinant == 1 and abs(trace) == 2:
        return FlowClass(FlowClass.DISTAL_UNIPOTENT, trace // 2, None)
    return FlowClass(FlowClass.EQUICONTINUOUS, None, None)
