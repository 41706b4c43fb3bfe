# -*- coding: utf-8 -*-
"""Trigonometric polynomials ``f(x) = sum_k a_k e(k . x)`` on the d-torus."""

from itertools import product
import cmath
import math

import numpy as np

from disjointmeter.exceptions import DimensionMismatch, ValidationError
from disjointmeter.lattice import as_unimodular, mat_vec
from disjointmeter.rng import SplitMix64
from .summation import checkpoint_sums

__all__ = [
    "TrigPolynomial",
    "random_trig_polynomial",
    "triangle_bound",
    "triangle_bounds",
]


class TrigPolynomial:
    """
    Finite sum of characters of the d-torus.

    Parameters
    ----------
    dimension: int
    coefficients: mapping or iterable of (tuple of int, complex)
        Frequency k to amplitude a_k. Zero amplitudes are dropped and terms
        are kept sorted by frequency.
    box: sequence of (int, int), optional
        Coefficient box ``[(lo_1, hi_1), ..., (lo_d, hi_d)]`` holding every
        frequency. Defaults to the smallest box around the support.

    Raises
    ------
    DimensionMismatch
        A frequency or the box has the wrong length.
    ValidationError
        lo > hi, or a frequency lies outside the box.
    """

    __slots__ = ("dimension", "terms", "box")

    def __init__(self, dimension, coefficients, box=None):
        if hasattr(coefficients, "items"):
            coefficients = coefficients.items()
        merged = {}
        for k, a in coefficients:
            k = tuple(int(_) for _ in k)
            if len(k) != dimension:
                raise DimensionMismatch(
                    "frequency %s in a %d-dimensional polynomial" % (k, dimension)
                )
            merged[k] = merged.get(k, 0) + complex(a)
        self.dimension = dimension
        self.terms = tuple(sorted((k, a) for k, a in merged.items() if a != 0))
        self.box = self._check_box(box)

    def _check_box(self, box):
        if box is None:
            if not self.terms:
                return ((0, 0),) * self.dimension
            columns = list(zip(*(k for k, _ in self.terms)))
            return tuple((min(c), max(c)) for c in columns)
        box = tuple((int(lo), int(hi)) for lo, hi in box)
        if len(box) != self.dimension:
            raise DimensionMismatch(
                "box %s for a %d-dimensional polynomial" % (box, self.dimension)
            )
        if any(lo > hi for lo, hi in box):
            raise ValidationError("invalid coefficient box %s" % (box,))
        for k, _ in self.terms:
            if not all(lo <= k_i <= hi for k_i, (lo, hi) in zip(k, box)):
                raise ValidationError("frequency %s outside the box %s" % (k, box))
        return box

    @classmethod
    def constant(cls, dimension, value=1):
        return cls(dimension, {(0,) * dimension: value})

    @classmethod
    def character(cls, k, amplitude=1):
        return cls(len(k), {tuple(k): amplitude})

    @property
    def frequencies(self):
        """numpy.ndarray: ``(terms, d)`` integer array of frequencies."""
        return np.array([k for k, _ in self.terms], dtype=np.int64).reshape(
            len(self.terms), self.dimension
        )

    @property
    def amplitudes(self):
        return np.array([a for _, a in self.terms], dtype=np.complex128)

    def sup_bound(self):
        """float: ``sum_k |a_k|``, an upper bound of ``|f|``."""
        return math.fsum(abs(a) for _, a in self.terms)

    def evaluate(self, x):
        """complex: f at a TorusPoint."""
        if x.dimension != self.dimension:
            raise DimensionMismatch("point and polynomial dimensions differ")
        total = 0j
        for k, a in self.terms:
            phase = sum(k_i * y for k_i, y in zip(k, x.coords)) % 1
            total += a * cmath.exp(2j * math.pi * float(phase))
        return total

    def evaluate_many(self, coords):
        """numpy.ndarray: f at each row of a ``(n, d)`` float array."""
        if not self.terms:
            return np.zeros(len(coords), dtype=np.complex128)
        phases = np.asarray(coords, dtype=np.float64) @ self.frequencies.T
        return np.exp(2j * np.pi * np.mod(phases, 1.0)) @ self.amplitudes

    def pullback(self, P):
        """
        ``f o h`` for ``h(x) = P x``.

        ``e(k . P x) = e((P^T k) . x)``, so the frequencies become ``P^T k``.
        """
        P = as_unimodular(P)
        if P.dimension != self.dimension:
            raise DimensionMismatch("matrix and polynomial dimensions differ")
        transpose = P.matrix.transpose()
        return TrigPolynomial(
            self.dimension, [(mat_vec(transpose, k), a) for k, a in self.terms]
        )

    def __eq__(self, other):
        if not isinstance(other, TrigPolynomial):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __repr__(self):
        return "TrigPolynomial(%d, %d terms)" % (self.dimension, len(self.terms))


def random_trig_polynomial(box, seed):
    """
    TrigPolynomial with a random amplitude of modulus at most 1 for every
    frequency in ``box = [(lo_1, hi_1), ..., (lo_d, hi_d)]`` (bounds
    inclusive).

    Raises
    ------
    ValidationError
        Empty box or lo > hi.
    """
    if not box or any(lo > hi for lo, hi in box):
        raise ValidationError("invalid coefficient box %s" % (box,))
    rng = SplitMix64(seed)
    coefficients = {}
    for k in product(*(range(lo, hi + 1) for lo, hi in box)):
        radius = rng.random()
        angle = rng.random()
        coefficients[k] = radius * cmath.exp(2j * math.pi * angle)
    return TrigPolynomial(len(box), coefficients, box)


def triangle_bounds(weights, f, checkpoints, block_size=1 << 16, lanes=256):
    """list of float: ``(1/N) sum_{n<=N} |c_n| * sum_k |a_k|`` for every checkpoint."""
    weights.prepare(max(checkpoints))

    def terms(start, stop):
        return np.abs(weights.block(start, stop)).astype(np.complex128)

    totals = checkpoint_sums(terms, checkpoints, 1, block_size, lanes)
    sup = f.sup_bound()
    return [total.real / N * sup for N, total in zip(checkpoints, totals)]


def triangle_bound(weights, f, N, block_size=1 << 16):
    """float: :func:`triangle_bounds` at the single checkpoint N."""
    (bound,) = triangle_bounds(weights, f, [N], block_size)
    return bound
