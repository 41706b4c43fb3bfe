# -*- coding: utf-8 -*-
"""
Closed-form orbit polynomials of upper-unipotent flows.

For B upper triangular with ones on the diagonal, coordinate i of
``T**n x`` satisfies ``x_i(n) = x_i(n-1) + sum_{j>i} B_ij x_j(n-1) + b_i``.
Working from the last coordinate up, each coordinate is an antidifference of
polynomials already known, so coordinate i is a polynomial in n of degree at
most ``d - i`` (counting from 0).
"""

from fractions import Fraction
import logging

from disjointmeter.exceptions import DimensionMismatch, NotUpperUnipotent
from disjointmeter.lattice import mat_vec, matmul
from .polynomial import RationalPolynomial, binomial_polynomial
from .triangularize import is_upper_unipotent
from .types import OrbitPolynomials

logger = logging.getLogger(__name__)

__all__ = [
    "discrete_sum",
    "evaluate_mod1",
    "orbit_polynomials",
    "phase_polynomial",
    "planar_phase_polynomial",
]


def _forward_differences(p):
    """Coefficients of p in the basis ``C(n, j)``: ``c_j = (Delta**j p)(0)``."""
    values = [p(n) for n in range(p.degree + 1)]
    coefficients = []
    while values:
        coefficients.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    return coefficients


def discrete_sum(p):
    """
    Antidifference ``q(n) = p(1) + ... + p(n-1)``.

    Uses ``sum_{k<n} C(k, j) = C(n, j+1)`` on the binomial expansion of p.
    q is valid for every integer ``n >= 0`` (``q(0) = -p(0)``, ``q(1) = 0``).

    Parameters
    ----------
    p: RationalPolynomial

    Returns
    -------
    RationalPolynomial
    """
    if p.is_zero:
        return RationalPolynomial()
    coefficients = _forward_differences(p)
    q = RationalPolynomial.constant(-coefficients[0])
    for j, c in enumerate(coefficients):
        if c:
            q = q + binomial_polynomial(j + 1) * c
    return q


def _unipotent_orbit(B, b, x):
    d = B.rows
    polys = [None] * d
    for i in reversed(range(d)):
        step = RationalPolynomial.constant(b[i])
        for j in range(i + 1, d):
            if B.entries[i][j]:
                step = step + polys[j] * B.entries[i][j]
        polys[i] = RationalPolynomial.constant(x[i] + step(0)) + discrete_sum(step)
    return tuple(polys)


def orbit_polynomials(B, b, x):
    """
    Coordinate polynomials of ``n -> T**n x`` for ``T(y) = B y + b``.

    Parameters
    ----------
    B: IntMatrix
        Upper triangular with every diagonal entry +1, or every entry -1
    b: TorusPoint
        Rational shift
    x: TorusPoint
        Rational starting point

    Returns
    -------
    OrbitPolynomials
        For diagonal -1 the orbit is split by parity: ``T**2`` has the
        unipotent matrix ``B**2`` and shift ``B b + b``; even n follow the
        orbit of x, odd n the orbit of ``T x``.

    Raises
    ------
    NotUpperUnipotent, DimensionMismatch
    """
    if not (is_upper_unipotent(B, 1) or is_upper_unipotent(B, -1)):
        raise NotUpperUnipotent("matrix is not upper triangular with diagonal +-1")
    if b.dimension != B.rows or x.dimension != B.rows:
        raise DimensionMismatch("matrix, shift and point dimensions differ")
    if B.entries[0][0] == 1:
        return OrbitPolynomials(
            polys=_unipotent_orbit(B, b.coords, x.coords),
            odd_polys=None,
            parity_split=False,
        )
    logger.debug("parity split for negative unipotent %dx%d", B.rows, B.rows)
    square = matmul(B, B)
    shift = tuple(y + s for y, s in zip(mat_vec(B, b.coords), b.coords))
    first = tuple(y + s for y, s in zip(mat_vec(B, x.coords), b.coords))
    even = _unipotent_orbit(square, shift, x.coords)
    odd = _unipotent_orbit(square, shift, first)
    half = Fraction(1, 2)
    return OrbitPolynomials(
        polys=tuple(_.substitute(half) for _ in even),
        odd_polys=tuple(_.substitute(half, -half) for _ in odd),
        parity_split=True,
    )


def phase_polynomial(k, orbit, parity=0):
    """
    Phase ``sum_i k_i P_i(n)`` of the character ``e(k . T**n x)``.

    Parameters
    ----------
    k: sequence of int
    orbit: OrbitPolynomials
    parity: int
        Selects the odd polynomials of a parity-split orbit when 1

    Raises
    ------
    DimensionMismatch
    """
    if len(k) != orbit.dimension:
        raise DimensionMismatch(
            "frequency has dimension %d, orbit %d" % (len(k), orbit.dimension)
        )
    polys = orbit.odd_polys if (orbit.parity_split and parity % 2) else orbit.polys
    phase = RationalPolynomial()
    for k_i, p in zip(k, polys):
        if k_i:
            phase = phase + p * k_i
    return phase


def evaluate_mod1(p, n):
    """Fraction: ``p(n) mod 1`` in [0, 1)."""
    return p(n) % 1


def planar_phase_polynomial(t, shift, point, k):
    """
    Phase polynomial of the 2-torus flow ``B = [[1, t], [0, 1]]``.

    With shift ``(a, b)``, point ``(x, y)`` and frequency ``(k1, k2)``::

        (t b k1 / 2) n**2 + (k1 (t y + a - t b / 2) + k2 b) n + (k1 x + k2 y)

    Agrees with :func:`phase_polynomial` on the same data.
    """
    a, b = (Fraction(_) for _ in shift)
    x, y = (Fraction(_) for _ in point)
    k1, k2 = k
    return RationalPolynomial(
        (
            k1 * x + k2 * y,
            k1 * (t * y + a - t * b / 2) + k2 * b,
            t * b * k1 / 2,
        )
    )

