# -*- coding: utf-8 -*-
"""Value types of the torus dynamics layer."""

from collections import namedtuple
from fractions import Fraction
import numbers

from disjointmeter.exceptions import DimensionMismatch, NotUnimodular
from disjointmeter.lattice import IntMatrix, det

__all__ = [
    "AffineTorusFlow",
    "FlowClass",
    "OrbitPolynomials",
    "TorusPoint",
    "TriangularForm",
    "UnipotentCertificate",
]


def _reduce_mod1(value):
    if isinstance(value, Fraction):
        return value % 1
    if isinstance(value, numbers.Integral):
        return Fraction(0)
    if isinstance(value, numbers.Rational):
        return Fraction(value) % 1
    reduced = float(value) % 1.0
    # tiny negative inputs round up to 1.0
    return 0.0 if reduced == 1.0 else reduced


class TorusPoint(namedtuple("TorusPoint", ["coords"])):
    """
    Point of the d-torus.

    Rational coordinates are kept as reduced :class:`fractions.Fraction` in
    [0, 1); coordinates given as floats stay floats and mark the point as
    irrational data for the float engine.

    Parameters and Attributes
    -------------------------
    coords: tuple of Fraction or float
        Coordinates reduced mod 1
    """

    __slots__ = ()

    @classmethod
    def of(cls, values):
        """Build a point from any iterable of numbers, reducing mod 1."""
        return cls(coords=tuple(_reduce_mod1(_) for _ in values))

    @classmethod
    def zero(cls, d):
        return cls(coords=(Fraction(0),) * d)

    @property
    def dimension(self):
        return len(self.coords)

    @property
    def is_rational(self):
        return all(isinstance(_, Fraction) for _ in self.coords)

    @property
    def is_zero(self):
        return all(_ == 0 for _ in self.coords)

    def as_floats(self):
        """tuple of float: Coordinates in double precision."""
        return tuple(float(_) for _ in self.coords)


class AffineTorusFlow(namedtuple("AffineTorusFlow", ["A", "a"])):
    """
    Affine map ``x -> A x + a mod 1`` of the d-torus.

    Build with :meth:`AffineTorusFlow.create`, which checks that A is
    unimodular and that the shift has the right dimension.

    Parameters and Attributes
    -------------------------
    A: IntMatrix
        Square integer matrix with determinant +1 or -1
    a: TorusPoint
        Shift
    """

    __slots__ = ()

    @classmethod
    def create(cls, A, a=None):
        """
        Check and build a flow.

        Parameters
        ----------
        A: IntMatrix or list of list of int
        a: TorusPoint or iterable of numbers, optional
            Defaults to the zero shift.

        Raises
        ------
        NotSquare, NotUnimodular, DimensionMismatch
        """
        if not isinstance(A, IntMatrix):
            A = IntMatrix.from_rows(A)
        determinant = det(A)
        if determinant not in (1, -1):
            raise NotUnimodular("flow matrix has determinant %s" % determinant)
        if a is None:
            a = TorusPoint.zero(A.rows)
        elif not isinstance(a, TorusPoint):
            a = TorusPoint.of(a)
        if a.dimension != A.rows:
            raise DimensionMismatch(
                "shift has dimension %d, matrix %d" % (a.dimension, A.rows)
            )
        return cls(A=A, a=a)

    @property
    def dimension(self):
        return self.A.rows

    @property
    def is_rational(self):
        return self.a.is_rational


class FlowClass(namedtuple("FlowClass", ["kind", "sign", "log_modulus"])):
    """
    Zero-entropy trichotomy of a 2-torus affine flow.

    Parameters and Attributes
    -------------------------
    kind: str
        ``distal_unipotent``, ``equicontinuous`` or ``positive_entropy``
    sign: int or None
        Eigenvalue (+1 or -1) of a distal unipotent flow
    log_modulus: float or None
        Log of the spectral radius, i.e. the entropy, of a positive entropy
        flow
    """

    __slots__ = ()

    DISTAL_UNIPOTENT = "distal_unipotent"
    EQUICONTINUOUS = "equicontinuous"
    POSITIVE_ENTROPY = "positive_entropy"


UnipotentCertificate = namedtuple(
    "UnipotentCertificate",
    [
        "sign",  # +1 or -1, the only eigenvalue
        "dimension",  # (A - sign*I)**dimension is zero
    ],
)


class TriangularForm(namedtuple("TriangularForm", ["P", "B", "sign"])):
    """
    Upper-triangular normal form of a (negative-)unipotent matrix.

    ``P**-1 @ A @ P == B`` exactly, B is upper triangular and every diagonal
    entry of B equals sign.

    Parameters and Attributes
    -------------------------
    P: UnimodularMatrix
        Conjugating matrix with determinant +1
    B: IntMatrix
        Normal form
    sign: int
        +1 or -1
    """

    __slots__ = ()


class OrbitPolynomials(
    namedtuple("OrbitPolynomials", ["polys", "odd_polys", "parity_split"])
):
    """
    Coordinate polynomials of an orbit ``n -> T**n x``.

    Coordinate i of ``T**n x`` is ``polys[i](n) mod 1``. Orbits of flows with
    eigenvalue -1 are only polynomial along each parity class; for those
    ``parity_split`` is True and odd n use ``odd_polys``.

    Parameters and Attributes
    -------------------------
    polys: tuple of RationalPolynomial
        Polynomials for every n (even n when split)
    odd_polys: tuple of RationalPolynomial or None
        Polynomials for odd n when split
    parity_split: bool
    """

    __slots__ = ()

    @property
    def dimension(self):
        return len(self.polys)

    def for_n(self, n):
        """tuple of RationalPolynomial: Polynomials valid at n."""
        if self.parity_split and n % 2:
            return self.odd_polys
        return self.polys

    def degrees(self):
        """tuple of int: Largest degree of each coordinate polynomial."""
        if not self.parity_split:
            return tuple(_.degree for _ in self.polys)
        return tuple(
            max(even.degree, odd.degree)
            for even, odd in zip(self.polys, self.odd_polys)
        )
