# -*- coding: utf-8 -*-
"""
Weyl sums, oscillation probes and disjointness series.

Every result is a :class:`SumSeries` of averages
``(1/N) sum_{n<=N} c_n g(n)`` at a list of checkpoints, summed with
:func:`.summation.checkpoint_sums`.
"""

from fractions import Fraction
import csv
import logging
import math

import numpy as np

from disjointmeter.codec import parse_coordinate
from disjointmeter.config import DEFAULTS
from disjointmeter.dynamics import (
    RationalPolynomial,
    check_unipotent,
    conjugate_flow,
    is_upper_unipotent,
    orbit_polynomials,
    phase_polynomial,
    pull_back,
    triangularize,
)
from disjointmeter.exceptions import (
    ComputationError,
    DimensionMismatch,
    EngineUnavailable,
    NotUnipotent,
    ValidationError,
)
from disjointmeter.rng import SplitMix64
from .summation import checkpoint_sums, validate_checkpoints
from .trig import triangle_bounds
from .types import (
    Checkpoint,
    DecayReport,
    PhaseSpec,
    ProbeEntry,
    ProbeReport,
    SumSeries,
)

logger = logging.getLogger(__name__)

__all__ = [
    "ENGINES",
    "FLOAT_ENGINE_MAX_DIM",
    "decay_report",
    "default_t_grid",
    "disjointness_series",
    "oscillation_probe",
    "phase_fractions",
    "read_series_csv",
    "weyl_sum",
    "write_probe_csv",
    "write_series_csv",
]

ENGINES = ("exact", "float")

_TWO_PI_I = 2j * np.pi

_BOUND_SLACK = 1e-12

# above this dimension non-dyadic float orbits drift past 1e-6 by N = 10**6
FLOAT_ENGINE_MAX_DIM = 3

_DYADIC_MAX_DENOMINATOR = 1 << 20


# ---------- phase evaluation ----------


class _ModularHorner:
    """
    ``P(n) mod 1`` for a rational polynomial, exactly.

    With D the common denominator of the coefficients, ``D P(n) mod D`` is
    evaluated by Horner in integers and divided by D at the end.
    """

    def __init__(self, polynomial):
        self.modulus = 1
        for c in polynomial.coefficients:
            self.modulus = math.lcm(self.modulus, c.denominator)
        self.numerators = [
            int(c * self.modulus) % self.modulus for c in polynomial.coefficients
        ]

    def __call__(self, n):
        D = self.modulus
        if D < 2 ** 31:
            m = n % D
            acc = np.zeros(len(n), dtype=np.int64)
            for c in reversed(self.numerators):
                acc = (acc * m + c) % D
            return acc / D
        values = []
        for v in n.tolist():
            acc = 0
            for c in reversed(self.numerators):
                acc = (acc * v + c) % D
            values.append(acc / D)
        return np.array(values, dtype=np.float64)


class _PhaseEvaluator:
    def __init__(self, phase):
        self.phase = phase
        if phase.kind == PhaseSpec.RATIONAL:
            self._even = _ModularHorner(phase.polynomial)
            self._odd = None
            if phase.odd_polynomial is not None:
                self._odd = _ModularHorner(phase.odd_polynomial)
        else:
            self._real = tuple(_ % 1.0 for _ in phase.polynomial)

    def __call__(self, start, stop):
        n = np.arange(start, stop, dtype=np.int64)
        if self.phase.kind == PhaseSpec.REAL:
            x = n.astype(np.float64)
            acc = np.zeros(len(n), dtype=np.float64)
            for c in reversed(self._real):
                acc = np.mod(acc * x + c, 1.0)
            return acc
        even = self._even(n)
        if self._odd is None:
            return even
        return np.where(n % 2 == 1, self._odd(n), even)


def phase_fractions(phase, start, stop):
    """
    ``P(n) mod 1`` for ``start <= n < stop`` as a float array.

    Rational phases are reduced exactly before the conversion to double;
    real phases run Horner in double with a reduction after every step.
    """
    return _PhaseEvaluator(phase)(start, stop)


# ---------- helpers ----------


def _options(checkpoints, workers, block_size):
    if checkpoints is None:
        checkpoints = DEFAULTS["checkpoints"]
    return (
        validate_checkpoints(checkpoints),
        workers or DEFAULTS["workers"],
        block_size or DEFAULTS["block_size"],
    )


def _series(checkpoints, totals, weights_kind, descriptor):
    rows = []
    for N, total in zip(checkpoints, totals):
        average = total / N
        rows.append(Checkpoint(N=N, average=average, magnitude=abs(average)))
    return SumSeries(
        checkpoints=tuple(rows), weights_kind=weights_kind, descriptor=descriptor
    )


def _check_phase(phase, checkpoints):
    if phase.degree > DEFAULTS["max_phase_degree"]:
        raise ValidationError(
            "phase degree %d exceeds %d" % (phase.degree, DEFAULTS["max_phase_degree"])
        )
    if phase.kind == PhaseSpec.REAL and checkpoints[-1] > DEFAULTS["real_phase_cap"]:
        raise ValidationError(
            "real phases are summed up to N=%d at most, got %d"
            % (DEFAULTS["real_phase_cap"], checkpoints[-1])
        )


# ---------- Weyl sums ----------


def weyl_sum(weights, phase, checkpoints=None, workers=None, block_size=None):
    """
    Weighted Weyl sum ``(1/N) sum_{n<=N} c_n e(P(n))`` at every checkpoint.

    Parameters
    ----------
    weights: WeightSequence
    phase: PhaseSpec
    checkpoints: list of int, optional
        Defaults to the package defaults
    workers: int, optional
        Threads used for the block sums; never changes the result
    block_size: int, optional

    Returns
    -------
    SumSeries

    Raises
    ------
    ValidationError
        Bad checkpoints, phase degree above ``max_phase_degree`` or a real
        phase summed beyond ``real_phase_cap``.
    """
    checkpoints, workers, block_size = _options(checkpoints, workers, block_size)
    _check_phase(phase, checkpoints)
    weights.prepare(checkpoints[-1])
    evaluate = _PhaseEvaluator(phase)

    def terms(start, stop):
        return weights.block(start, stop) * np.exp(_TWO_PI_I * evaluate(start, stop))

    totals = checkpoint_sums(
        terms, checkpoints, workers, block_size, DEFAULTS["kahan_lanes"]
    )
    return _series(checkpoints, totals, weights.kind, phase.describe())


def default_t_grid(size=None):
    """
    list: ``0``, the points ``(j + 1/2) / size`` as Fractions and the golden
    ratio fraction ``(sqrt(5) - 1) / 2`` as a float.
    """
    size = size or DEFAULTS["t_grid_size"]
    grid = [Fraction(0)]
    grid += [Fraction(2 * j + 1, 2 * size) for j in range(size)]
    grid.append((math.sqrt(5) - 1) / 2)
    return grid


def _monomial_phase(k, t):
    if isinstance(t, Fraction):
        return PhaseSpec.rational(RationalPolynomial.monomial(k, t))
    return PhaseSpec.real([0.0] * k + [t])


def oscillation_probe(
    weights,
    order,
    t_grid=None,
    mode="weak",
    checkpoints=None,
    samples=None,
    seed=0,
    workers=None,
    block_size=None,
):
    """
    Probe a weight sequence for higher-order oscillation.

    In ``weak`` mode every pair ``(k, t)`` with ``1 <= k <= order`` and t in
    the grid gets the phase ``t n**k``. In ``strong`` mode ``samples`` real
    polynomials of degree at most ``order`` with coefficients in [0, 1) are
    drawn from a SplitMix64 generator seeded with ``seed``.

    Returns
    -------
    ProbeReport

    Raises
    ------
    ValidationError
        order < 1, unknown mode, or a grid point outside [0, 1).
    """
    if order < 1:
        raise ValidationError("probe order must be >= 1, got %s" % order)
    if order > DEFAULTS["max_phase_degree"]:
        raise ValidationError("probe order %d exceeds max_phase_degree" % order)
    checkpoints, workers, block_size = _options(checkpoints, workers, block_size)
    phases = []
    if mode == "weak":
        if t_grid is None:
            grid = default_t_grid()
        else:
            grid = [parse_coordinate(_) for _ in t_grid]
        if any(not 0 <= t < 1 for t in grid):
            raise ValidationError("grid points must lie in [0, 1)")
        for k in range(1, order + 1):
            for t in grid:
                phases.append(("k=%d,t=%s" % (k, t), _monomial_phase(k, t)))
    elif mode == "strong":
        rng = SplitMix64(seed)
        for i in range(samples or DEFAULTS["strong_samples"]):
            degree = rng.randint(1, order)
            coefficients = [rng.random() for _ in range(degree + 1)]
            phases.append(("poly%d" % i, PhaseSpec.real(coefficients)))
    else:
        raise ValidationError("unknown probe mode %r" % mode)
    logger.info("%s probe of order %d: %d phases", mode, order, len(phases))
    entries = tuple(
        ProbeEntry(label, weyl_sum(weights, phase, checkpoints, workers, block_size))
        for label, phase in phases
    )
    return ProbeReport(mode=mode, order=order, checkpoints=checkpoints, entries=entries)


# ---------- disjointness ----------


def _exact_orbit_values(flow, f, x):
    """Callable ``(start, stop) -> f(T**n x)`` from exact orbit polynomials."""
    if not (flow.is_rational and x.is_rational):
        raise EngineUnavailable("exact engine needs a rational shift and point")
    try:
        certificate = check_unipotent(flow.A)
    except NotUnipotent as e:
        raise EngineUnavailable("exact engine needs a unipotent flow: %s" % e)
    if not is_upper_unipotent(flow.A, certificate.sign):
        form = triangularize(flow.A)
        logger.debug("exact engine conjugates by P = %s", form.P.matrix.tolist())
        flow = conjugate_flow(flow, form.P)
        x = pull_back(form.P, x)
        f = f.pullback(form.P)
    orbit = orbit_polynomials(flow.A, flow.a, x)
    evaluators = []
    for k, a in f.terms:
        odd = phase_polynomial(k, orbit, 1) if orbit.parity_split else None
        phase = PhaseSpec.rational(phase_polynomial(k, orbit), odd)
        evaluators.append((a, _PhaseEvaluator(phase)))

    def values(start, stop):
        total = np.zeros(stop - start, dtype=np.complex128)
        for a, evaluate in evaluators:
            total += a * np.exp(_TWO_PI_I * evaluate(start, stop))
        return total

    return values


def _float_orbit(flow, x, n_max):
    A = [[float(_) for _ in row] for row in flow.A.entries]
    a = [float(_) for _ in flow.a.coords]
    y = x.as_floats()
    orbit = np.empty((n_max, flow.dimension), dtype=np.float64)
    for n in range(n_max):
        y = [
            (math.fsum(r * v for r, v in zip(row, y)) + s) % 1.0
            for row, s in zip(A, a)
        ]
        orbit[n] = y
    return orbit


def _is_dyadic(point):
    for c in point.coords:
        q = Fraction(c).denominator
        if q & (q - 1) or q > _DYADIC_MAX_DENOMINATOR:
            return False
    return True


def _float_orbit_values(flow, f, x, n_max):
    logger.debug("iterating flow in double precision up to n=%d", n_max)
    if flow.dimension > FLOAT_ENGINE_MAX_DIM and not (
        _is_dyadic(flow.a) and _is_dyadic(x)
    ):
        logger.warning(
            "float engine with non-dyadic data in dimension %d: expect drift "
            "above 1e-6 from the exact orbit",
            flow.dimension,
        )
    orbit = _float_orbit(flow, x, n_max)

    def values(start, stop):
        return f.evaluate_many(orbit[start - 1 : stop - 1])

    return values


def _check_triangle_bound(weights, f, series, checkpoints, block_size):
    bounds = triangle_bounds(
        weights, f, checkpoints, block_size, DEFAULTS["kahan_lanes"]
    )
    for checkpoint, bound in zip(series.checkpoints, bounds):
        if checkpoint.magnitude > bound * (1 + _BOUND_SLACK) + _BOUND_SLACK:
            raise ComputationError(
                "|S_N| = %r exceeds the triangle bound %r at N=%d"
                % (checkpoint.magnitude, bound, checkpoint.N)
            )


def disjointness_series(
    weights,
    flow,
    f,
    x,
    checkpoints=None,
    engine="exact",
    workers=None,
    block_size=None,
):
    """
    Disjointness averages ``S_N(x) = (1/N) sum_{n<=N} c_n f(T**n x)``.

    The ``exact`` engine writes every character of f along the orbit as
    ``e(P_k(n))`` with exact orbit polynomials; flows that are
    (negative-)unipotent but not upper triangular are triangularized and
    conjugated first. The ``float`` engine iterates the flow in double
    precision; with non-dyadic shift or point it stays within 1e-6 of the
    exact engine up to N = 10**6 only for d <= FLOAT_ENGINE_MAX_DIM and logs
    a warning above that. Every series is checked against the triangle bound
    ``(1/N) sum |c_n| * sum_k |a_k|``.

    Parameters
    ----------
    weights: WeightSequence
    flow: AffineTorusFlow
    f: TrigPolynomial
    x: TorusPoint
    checkpoints: list of int, optional
    engine: str
        ``exact`` or ``float``
    workers: int, optional
    block_size: int, optional

    Returns
    -------
    SumSeries

    Raises
    ------
    DimensionMismatch
    EngineUnavailable
        Exact engine with irrational data or a flow that is not unipotent.
    ValidationError
        Unknown engine or bad checkpoints.
    """
    if not (flow.dimension == f.dimension == x.dimension):
        raise DimensionMismatch(
            "flow, observable and point have dimensions %d, %d, %d"
            % (flow.dimension, f.dimension, x.dimension)
        )
    if engine not in ENGINES:
        raise ValidationError("unknown engine %r" % engine)
    checkpoints, workers, block_size = _options(checkpoints, workers, block_size)
    n_max = checkpoints[-1]
    if engine == "exact":
        orbit_values = _exact_orbit_values(flow, f, x)
    else:
        orbit_values = _float_orbit_values(flow, f, x, n_max)
    weights.prepare(n_max)
    logger.info(
        "disjointness series up to N=%d, %s engine, %d terms in f",
        n_max,
        engine,
        len(f.terms),
    )

    def terms(start, stop):
        return weights.block(start, stop) * orbit_values(start, stop)

    totals = checkpoint_sums(
        terms, checkpoints, workers, block_size, DEFAULTS["kahan_lanes"]
    )
    descriptor = "flow[A=%s,a=(%s)] x=(%s) f[%d terms] %s" % (
        flow.A.tolist(),
        ",".join(str(_) for _ in flow.a.coords),
        ",".join(str(_) for _ in x.coords),
        len(f.terms),
        engine,
    )
    series = _series(checkpoints, totals, weights.kind, descriptor)
    _check_triangle_bound(weights, f, series, checkpoints, block_size)
    return series


# ---------- reports ----------


def decay_report(series):
    """
    Magnitudes, ratios of consecutive magnitudes (previous / next) and
    whether the magnitudes strictly decrease.

    Raises
    ------
    ValidationError
        Fewer than 2 checkpoints.
    """
    if len(series.checkpoints) < 2:
        raise ValidationError("a decay report needs at least 2 checkpoints")
    rows = tuple((_.N, _.magnitude) for _ in series.checkpoints)
    ratios = tuple(
        prev / nxt if nxt else math.inf
        for (_, prev), (_, nxt) in zip(rows, rows[1:])
    )
    monotone = all(nxt < prev for (_, prev), (_, nxt) in zip(rows, rows[1:]))
    return DecayReport(rows=rows, ratios=ratios, monotone=monotone)


CSV_HEADER = ("N", "re", "im", "mag")


def write_series_csv(series, out):
    """
    Write a series as CSV ``N,re,im,mag``.

    Floats are written with ``repr`` so they read back bit for bit.

    Parameters
    ----------
    series: SumSeries
    out: str or file object
    """
    if not hasattr(out, "write"):
        with open(out, "w", newline="", encoding="utf-8") as f:
            return write_series_csv(series, f)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for _ in series.checkpoints:
        writer.writerow(
            (_.N, repr(_.average.real), repr(_.average.imag), repr(_.magnitude))
        )


def read_series_csv(filename):
    """
    tuple of Checkpoint: Checkpoints from a CSV written by
    :func:`write_series_csv`.

    Raises
    ------
    ValidationError
    """
    with open(filename, "r", newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        if tuple(next(reader, ())) != CSV_HEADER:
            raise ValidationError("%s is not a series CSV" % filename)
        try:
            return tuple(
                Checkpoint(int(N), complex(float(re), float(im)), float(mag))
                for N, re, im, mag in reader
            )
        except ValueError as e:
            raise ValidationError("bad row in %s: %s" % (filename, e))


def write_probe_csv(report, out):
    """Write every probe entry as CSV ``label,N,re,im,mag``."""
    if not hasattr(out, "write"):
        with open(out, "w", newline="", encoding="utf-8") as f:
            return write_probe_csv(report, f)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("label",) + CSV_HEADER)
    for entry in report.entries:
        for _ in entry.series.checkpoints:
            writer.writerow(
                (
                    entry.label,
                    _.N,
                    repr(_.average.real),
                    repr(_.average.imag),
                    repr(_.magnitude),
                )
            )
