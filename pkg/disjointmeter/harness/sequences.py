# -*- coding: utf-8 -*-
"""
Weight sequences ``c_n``.

Sequences are evaluated in blocks as numpy ``complex128`` arrays. Anything
that needs a precomputation up to some N (the Mobius sieve, the fractional
parts of a geometric sequence) does it in :meth:`WeightSequence.prepare`,
which callers run once before any threaded summation; afterwards blocks are
read-only slices.
"""

from fractions import Fraction
import logging
import math

import mpmath
import numpy as np

from disjointmeter.codec import parse_rational, parse_real
from disjointmeter.exceptions import InsufficientPrecision, ValidationError
from .summation import lane_sum
from .types import GeometricParams, SequenceStats

logger = logging.getLogger(__name__)

__all__ = [
    "CharacterSequence",
    "ConstantSequence",
    "CustomSequence",
    "GeometricSequence",
    "MobiusSequence",
    "WeightSequence",
    "geometric_params",
    "geometric_sequence",
    "lambda_moment",
    "mertens",
    "mobius_sieve",
    "mobius_trial",
    "precision_floor",
    "weights_from_config",
]

_MASK64 = (1 << 64) - 1
_GUARD_BITS = 64


# ---------- Mobius ----------


def mobius_sieve(N):
    """
    Mobius function on ``0 .. N``.

    Smallest prime factors come from an Eratosthenes pass; mu is then filled
    in doubling ranges ``[lo, 2 lo)`` from ``mu(n) = 0`` if ``p**2 | n`` and
    ``-mu(n / p)`` otherwise, p the smallest prime factor of n.

    Parameters
    ----------
    N: int
        At least 1

    Returns
    -------
    numpy.ndarray
        int8 array of length N + 1 with ``mu[n]``; ``mu[0]`` is 0.
    """
    if N < 1:
        raise ValidationError("mobius_sieve needs N >= 1, got %s" % N)
    dtype = np.int32 if N < 2 ** 31 else np.int64
    spf = np.zeros(N + 1, dtype=dtype)
    for p in range(2, math.isqrt(N) + 1):
        if spf[p] == 0:
            multiples = spf[p * p :: p]
            multiples[multiples == 0] = p
    n = np.arange(N + 1, dtype=dtype)
    primes = spf == 0
    spf[primes] = n[primes]
    mu = np.zeros(N + 1, dtype=np.int8)
    mu[1] = 1
    lo = 2
    while lo <= N:
        hi = min(2 * lo, N + 1)
        p = spf[lo:hi]
        m = n[lo:hi] // p
        mu[lo:hi] = np.where(m % p == 0, 0, -mu[m])
        logger.debug("sieve chunk [%d, %d)", lo, hi)
        lo = hi
    return mu


def mobius_trial(n):
    """int: mu(n) by trial division."""
    if n < 1:
        raise ValidationError("mobius_trial needs n >= 1, got %s" % n)
    value = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            value = -value
        p += 1
    return -value if n > 1 else value


def mertens(mu):
    """numpy.ndarray: Cumulative sums ``M(n) = mu(1) + ... + mu(n)``."""
    return np.cumsum(mu, dtype=np.int64)


# ---------- sequences ----------


class WeightSequence:
    """
    Base class of weight sequences ``n -> c_n``.

    Subclasses set ``kind`` and implement :meth:`value`; :meth:`block` may be
    overridden with a vectorized version.
    """

    kind = "custom"

    def value(self, n):
        """complex: c_n for n >= 1."""
        raise NotImplementedError

    def prepare(self, n_max):
        """Precompute what :meth:`block` needs for ``n <= n_max``."""

    def block(self, start, stop):
        """numpy.ndarray: ``c_n`` for ``start <= n < stop``."""
        values = [self.value(n) for n in range(start, stop)]
        return np.array(values, dtype=np.complex128)

    def describe(self):
        return self.kind


class MobiusSequence(WeightSequence):
    """The Mobius function, read from a sieve extended on demand."""

    kind = "mobius"

    def __init__(self):
        self._mu = None

    def prepare(self, n_max):
        if self._mu is None or len(self._mu) <= n_max:
            logger.info("sieving Mobius function up to %d", n_max)
            self._mu = mobius_sieve(max(n_max, 1))

    @property
    def mu(self):
        return self._mu

    def value(self, n):
        if self._mu is not None and n < len(self._mu):
            return complex(self._mu[n])
        return complex(mobius_trial(n))

    def block(self, start, stop):
        self.prepare(stop - 1)
        return self._mu[start:stop].astype(np.complex128)


class ConstantSequence(WeightSequence):
    kind = "constant"

    def __init__(self, value=1):
        self.constant = complex(value)

    def value(self, n):
        return self.constant

    def block(self, start, stop):
        return np.full(stop - start, self.constant, dtype=np.complex128)

    def describe(self):
        return "constant[%r]" % self.constant


class CharacterSequence(WeightSequence):
    """
    Additive character ``c_n = e(n theta)``.

    Rational theta is reduced exactly; float theta in double precision.
    """

    kind = "character"

    def __init__(self, theta):
        try:
            self.theta = parse_rational(theta)
        except ValidationError:
            self.theta = float(parse_real(theta))

    def _fractions(self, n):
        theta = self.theta
        if isinstance(theta, Fraction) and theta.denominator < 2 ** 31:
            q = theta.denominator
            return ((n % q) * (theta.numerator % q) % q) / q
        return np.mod(n * float(theta), 1.0)

    def value(self, n):
        return complex(np.exp(2j * np.pi * self._fractions(np.int64(n))))

    def block(self, start, stop):
        n = np.arange(start, stop, dtype=np.int64)
        return np.exp(2j * np.pi * self._fractions(n))

    def describe(self):
        return "character[%s]" % self.theta


class CustomSequence(WeightSequence):
    """Wrap any callable ``n -> c_n``."""

    def __init__(self, func, kind="custom"):
        self.func = func
        self.kind = kind

    def value(self, n):
        return complex(self.func(n))


# ---------- geometric sequences ----------


def geometric_params(alpha, beta, g="const1", gamma=0, precision_bits=None):
    """
    Check and build :class:`GeometricParams`.

    Raises
    ------
    ValidationError
        alpha is 0, beta <= 1, unknown g, negative gamma, or g(beta) <= 0.
    """
    params = GeometricParams(alpha, beta, g, float(gamma), precision_bits)
    if g not in GeometricParams.G_CATALOG:
        raise ValidationError(
            "g must be one of %s, got %r" % (", ".join(GeometricParams.G_CATALOG), g)
        )
    if params.gamma < 0:
        raise ValidationError("gamma must be >= 0")
    ctx = mpmath.MPContext()
    ctx.prec = 128
    if parse_real(alpha, ctx) == 0:
        raise ValidationError("alpha must be nonzero")
    if parse_real(beta, ctx) <= 1:
        raise ValidationError("beta must be > 1, got %s" % beta)
    if _g_value(params, ctx) <= 0:
        raise ValidationError("g(beta) must be positive")
    return params


def _g_value(params, ctx):
    beta = parse_real(params.beta, ctx)
    if params.g == "const1":
        return ctx.mpf(1)
    if params.g == "identity":
        return beta
    if params.g == "log":
        return ctx.log(beta)
    return ctx.power(beta, ctx.mpf(params.gamma))


def _scale(params, ctx):
    """mpf: ``alpha * g(beta)``."""
    return parse_real(params.alpha, ctx) * _g_value(params, ctx)


def precision_floor(beta, n):
    """int: ``ceil(n log2 beta) + 64``, the bits needed for ``beta**n mod 1``."""
    ctx = mpmath.MPContext()
    ctx.prec = 128
    return int(ctx.ceil(n * ctx.log(parse_real(beta, ctx), 2))) + _GUARD_BITS


def _magnitude_bits(params):
    ctx = mpmath.MPContext()
    ctx.prec = 64
    scale = abs(_scale(params, ctx))
    return max(0, int(ctx.ceil(ctx.log(scale, 2)))) + 8


def _working_bits(params, n):
    floor = precision_floor(params.beta, n)
    bits = params.precision_bits
    if bits is None:
        return floor
    if bits < floor:
        raise InsufficientPrecision(
            "%d bits requested, %d needed for n = %d" % (bits, floor, n)
        )
    return bits


def geometric_sequence(params, n):
    """
    ``c_n = e(alpha * beta**n * g(beta))``.

    The fractional part is computed with mpmath at ``ceil(n log2 beta) + 64``
    bits (or ``params.precision_bits``) before rounding to double.

    Raises
    ------
    ValidationError
        n < 1.
    InsufficientPrecision
        precision_bits is below the floor for n.
    """
    if n < 1:
        raise ValidationError("geometric_sequence needs n >= 1, got %s" % n)
    bits = _working_bits(params, n)
    ctx = mpmath.MPContext()
    ctx.prec = bits + _magnitude_bits(params)
    theta = ctx.frac(_scale(params, ctx) * ctx.power(parse_real(params.beta, ctx), n))
    return complex(np.exp(2j * np.pi * float(theta)))


def _dyadic(beta):
    """``(p, s)`` with ``beta == p / 2**s``, or None."""
    if isinstance(beta, float):
        value = Fraction(beta)
    else:
        try:
            value = parse_rational(beta)
        except ValidationError:
            return None
    q = value.denominator
    if q & (q - 1):
        return None
    return value.numerator, q.bit_length() - 1


class GeometricSequence(WeightSequence):
    """
    Geometric oscillating sequence ``e(alpha * beta**n * g(beta))``.

    :meth:`prepare` computes every fractional part up to N once. For
    ``beta = p / 2**s`` it scales ``alpha g(beta)`` to an integer
    ``A ~ alpha g(beta) 2**bits`` and reads the top 64 fractional bits of
    ``A p**n / 2**(bits + s n)`` with integer shifts; otherwise it multiplies
    by beta at fixed precision with extra guard bits for the accumulated
    rounding.
    """

    kind = "geometric"

    def __init__(self, params):
        self.params = params
        self._fractions = np.zeros(0)

    def describe(self):
        return "geometric[alpha=%s,beta=%s,g=%s]" % (
            self.params.alpha,
            self.params.beta,
            self.params.g,
        )

    def value(self, n):
        return geometric_sequence(self.params, n)

    def prepare(self, n_max):
        if len(self._fractions) >= n_max:
            return
        bits = _working_bits(self.params, n_max)
        dyadic = _dyadic(self.params.beta)
        logger.debug(
            "geometric fractions up to n=%d at %d bits (%s)",
            n_max,
            bits,
            "dyadic" if dyadic else "general",
        )
        if dyadic:
            fractions = self._dyadic_fractions(n_max, bits, *dyadic)
        else:
            fractions = self._general_fractions(n_max, bits)
        self._fractions = np.array(fractions, dtype=np.float64)

    def _dyadic_fractions(self, n_max, bits, p, s):
        ctx = mpmath.MPContext()
        ctx.prec = bits + _magnitude_bits(self.params) + _GUARD_BITS
        scaled = int(ctx.floor(ctx.ldexp(_scale(self.params, ctx), bits)))
        unit = 2.0 ** -64
        fractions = []
        x = scaled * p
        for n in range(1, n_max + 1):
            top = (x >> (bits + s * n - 64)) & _MASK64
            fractions.append(top * unit)
            x *= p
        return fractions

    def _general_fractions(self, n_max, bits):
        ctx = mpmath.MPContext()
        ctx.prec = bits + _magnitude_bits(self.params) + n_max.bit_length() + 8
        beta = parse_real(self.params.beta, ctx)
        y = _scale(self.params, ctx) * beta
        fractions = []
        for _ in range(n_max):
            fractions.append(float(ctx.frac(y)))
            y *= beta
        return fractions

    def block(self, start, stop):
        self.prepare(stop - 1)
        return np.exp(2j * np.pi * self._fractions[start - 1 : stop - 1])


def weights_from_config(section):
    """
    WeightSequence from the ``weights`` section of an experiment config.

    Raises
    ------
    ValidationError
    """
    kind = section["kind"]
    if kind == "mobius":
        return MobiusSequence()
    if kind == "constant":
        return ConstantSequence(complex(parse_real(section["value"])))
    if kind == "character":
        return CharacterSequence(section["theta"])
    if kind == "geometric":
        return GeometricSequence(
            geometric_params(
                section["alpha"],
                section["beta"],
                section.get("g", "const1"),
                section.get("gamma", 0),
                section.get("precision_bits"),
            )
        )
    raise ValidationError("unknown weights kind %r" % kind)


# ---------- statistics ----------


def lambda_moment(seq, lam, N, block_size=1 << 16):
    """
    ``K = (1/N) sum_{n<=N} |c_n|**lam``.

    Raises
    ------
    ValidationError
        lam <= 1 or N < 1.
    """
    if not lam > 1:
        raise ValidationError("lambda must be > 1, got %s" % lam)
    if N < 1:
        raise ValidationError("N must be >= 1, got %s" % N)
    seq.prepare(N)
    total = 0.0
    for start in range(1, N + 1, block_size):
        stop = min(start + block_size, N + 1)
        total += lane_sum(np.abs(seq.block(start, stop)) ** lam).real
    return SequenceStats(lam=float(lam), K_estimate=total / N, N_used=N)
