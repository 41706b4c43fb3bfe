# -*- coding: utf-8 -*-
"""Polynomials in one variable with exact rational coefficients."""

from fractions import Fraction
import numbers

__all__ = ["RationalPolynomial", "binomial_polynomial"]


class RationalPolynomial:
    """
    Polynomial with :class:`fractions.Fraction` coefficients.

    Parameters
    ----------
    coefficients: iterable of numbers
        Coefficients in ascending degree. Trailing zeros are dropped; the
        zero polynomial is stored as ``(0,)`` and has degree 0.

    Notes
    -----
    Instances are immutable and hashable. Integer, Fraction and
    RationalPolynomial operands mix freely under ``+``, ``-`` and ``*``.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients=(0,)):
        coefficients = [Fraction(_) for _ in coefficients] or [Fraction(0)]
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self):
        """tuple of Fraction: Coefficients in ascending degree."""
        return self._coefficients

    @property
    def degree(self):
        return len(self._coefficients) - 1

    @property
    def is_zero(self):
        return self._coefficients == (0,)

    def __call__(self, n):
        """Exact value at n (Horner)."""
        value = Fraction(0)
        for c in reversed(self._coefficients):
            value = value * n + c
        return value

    def substitute(self, alpha, beta=0):
        """RationalPolynomial: ``n -> p(alpha*n + beta)``."""
        inner = RationalPolynomial((beta, alpha))
        result = RationalPolynomial()
        for c in reversed(self._coefficients):
            result = result * inner + c
        return result

    def _coerce(self, other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, numbers.Rational):
            return RationalPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coefficients, other._coefficients
        size = max(len(a), len(b))
        a = a + (0,) * (size - len(a))
        b = b + (0,) * (size - len(b))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-_ for _ in self._coefficients)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            return RationalPolynomial(_ * other for _ in self._coefficients)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        product = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, x in enumerate(self._coefficients):
            if x == 0:
                continue
            for j, y in enumerate(other._coefficients):
                product[i + j] += x * y
        return RationalPolynomial(product)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return "RationalPolynomial(%s)" % [str(_) for _ in self._coefficients]


def binomial_polynomial(m):
    """RationalPolynomial of ``C(n, m) = n (n-1) ... (n-m+1) / m!``."""
    result = RationalPolynomial.constant(1)
    for j in range(m):
        result = result * RationalPolynomial((Fraction(-j, j + 1), Fraction(1, j + 1)))
    return result
