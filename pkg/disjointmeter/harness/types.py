# -*- coding: utf-8 -*-
"""Value types of the Weyl-sum harness."""

from collections import namedtuple

import numpy as np

from disjointmeter.dynamics import RationalPolynomial

__all__ = [
    "Checkpoint",
    "DecayReport",
    "GeometricParams",
    "PhaseSpec",
    "ProbeAggregate",
    "ProbeEntry",
    "ProbeReport",
    "SequenceStats",
    "SumSeries",
]


class PhaseSpec(namedtuple("PhaseSpec", ["kind", "polynomial", "odd_polynomial"])):
    """
    Polynomial phase ``P(n)`` of a Weyl sum.

    Parameters and Attributes
    -------------------------
    kind: str
        ``rational`` (exact reduction mod 1) or ``real`` (Horner in double)
    polynomial: RationalPolynomial or tuple of float
        Coefficients in ascending degree
    odd_polynomial: RationalPolynomial or None
        Phase used at odd n, for orbits split by parity
    """

    __slots__ = ()

    RATIONAL = "rational"
    REAL = "real"

    @classmethod
    def rational(cls, polynomial, odd_polynomial=None):
        if not isinstance(polynomial, RationalPolynomial):
            polynomial = RationalPolynomial(polynomial)
        if odd_polynomial is not None and not isinstance(
            odd_polynomial, RationalPolynomial
        ):
            odd_polynomial = RationalPolynomial(odd_polynomial)
        return cls(cls.RATIONAL, polynomial, odd_polynomial)

    @classmethod
    def real(cls, coefficients):
        coefficients = tuple(float(_) for _ in coefficients) or (0.0,)
        return cls(cls.REAL, coefficients, None)

    @property
    def degree(self):
        if self.kind == self.RATIONAL:
            degrees = [self.polynomial.degree]
            if self.odd_polynomial is not None:
                degrees.append(self.odd_polynomial.degree)
            return max(degrees)
        nonzero = [i for i, c in enumerate(self.polynomial) if c != 0.0]
        return nonzero[-1] if nonzero else 0

    def describe(self):
        """str: Short text form used in series descriptors."""
        if self.kind == self.RATIONAL:
            text = ",".join(str(_) for _ in self.polynomial.coefficients)
            if self.odd_polynomial is not None:
                odd = ",".join(str(_) for _ in self.odd_polynomial.coefficients)
                text = "%s|%s" % (text, odd)
            return "rational[%s]" % text
        return "real[%s]" % ",".join(repr(_) for _ in self.polynomial)


Checkpoint = namedtuple(
    "Checkpoint",
    [
        "N",  # number of terms summed
        "average",  # complex (1/N) * sum
        "magnitude",  # abs(average)
    ],
)


class SumSeries(namedtuple("SumSeries", ["checkpoints", "weights_kind", "descriptor"])):
    """
    Checkpointed averages ``(1/N) sum_{n<=N} c_n g(n)``.

    Parameters and Attributes
    -------------------------
    checkpoints: tuple of Checkpoint
        Strictly increasing in N
    weights_kind: str
        Kind of the weight sequence
    descriptor: str
        Phase or flow the series was computed for
    """

    __slots__ = ()

    @property
    def magnitudes(self):
        return tuple(_.magnitude for _ in self.checkpoints)

    def at(self, N):
        """Checkpoint at N."""
        for checkpoint in self.checkpoints:
            if checkpoint.N == N:
                return checkpoint
        raise KeyError(N)


ProbeEntry = namedtuple("ProbeEntry", ["label", "series"])


ProbeAggregate = namedtuple("ProbeAggregate", ["N", "max", "median"])


class ProbeReport(
    namedtuple("ProbeReport", ["mode", "order", "checkpoints", "entries"])
):
    """
    Oscillation probe of a weight sequence against many phases.

    Parameters and Attributes
    -------------------------
    mode: str
        ``weak`` (phases ``t n**k`` on a grid of t) or ``strong`` (random
        real polynomials of degree up to ``order``)
    order: int
    checkpoints: tuple of int
    entries: tuple of ProbeEntry
    """

    __slots__ = ()

    def aggregate(self):
        """
        list of ProbeAggregate: Largest and median magnitude over all
        entries at every checkpoint.
        """
        rows = []
        for i, N in enumerate(self.checkpoints):
            magnitudes = np.array(
                [_.series.checkpoints[i].magnitude for _ in self.entries]
            )
            rows.append(
                ProbeAggregate(N, float(magnitudes.max()), float(np.median(magnitudes)))
            )
        return rows


DecayReport = namedtuple(
    "DecayReport",
    [
        "rows",  # tuple of (N, magnitude)
        "ratios",  # magnitude ratios of consecutive checkpoints, previous / next
        "monotone",  # True when magnitudes strictly decrease
    ],
)


class SequenceStats(namedtuple("SequenceStats", ["lam", "K_estimate", "N_used"])):
    """
    Moment statistic ``K = (1/N) sum_{n<=N} |c_n|**lam``.

    Parameters and Attributes
    -------------------------
    lam: float
        Exponent, greater than 1
    K_estimate: float
    N_used: int
    """

    __slots__ = ()


class GeometricParams(
    namedtuple("GeometricParams", ["alpha", "beta", "g", "gamma", "precision_bits"])
):
    """
    Parameters of ``c_n = e(alpha * beta**n * g(beta))``.

    alpha and beta are real expressions (see
    :func:`disjointmeter.codec.parse_real`) so they can be evaluated at any
    precision.

    Parameters and Attributes
    -------------------------
    alpha: str
        Nonzero real
    beta: str
        Real greater than 1
    g: str
        One of ``const1``, ``identity``, ``log``, ``power``
    gamma: float
        Exponent of ``power``, at least 0
    precision_bits: int or None
        Working precision; chosen per n when None
    """

    __slots__ = ()

    G_CATALOG = ("const1", "identity", "log", "power")
