# -*- coding: utf-8 -*-
"""
Deterministic compensated summation over [1, N].

The range is cut into fixed blocks (plus extra cuts at every checkpoint).
Each segment is summed with lane-wise Kahan summation in numpy, segments are
folded in ascending order with a scalar compensated accumulator. Segment
boundaries never depend on the worker count, so results are identical bit
for bit whatever the number of threads.
"""

from concurrent.futures import ThreadPoolExecutor
import logging

import numpy as np

from disjointmeter.exceptions import ValidationError

logger = logging.getLogger(__name__)

__all__ = [
    "CompensatedSum",
    "checkpoint_sums",
    "lane_sum",
    "segments",
    "validate_checkpoints",
]


class CompensatedSum:
    """Neumaier accumulator for real or complex values."""

    __slots__ = ("_re", "_im", "_re_c", "_im_c")

    def __init__(self):
        self._re = self._im = 0.0
        self._re_c = self._im_c = 0.0

    @staticmethod
    def _step(total, correction, value):
        t = total + value
        if abs(total) >= abs(value):
            correction += (total - t) + value
        else:
            correction += (value - t) + total
        return t, correction

    def add(self, value):
        value = complex(value)
        self._re, self._re_c = self._step(self._re, self._re_c, value.real)
        self._im, self._im_c = self._step(self._im, self._im_c, value.imag)

    @property
    def value(self):
        return complex(self._re + self._re_c, self._im + self._im_c)


def lane_sum(values, lanes=256):
    """
    Compensated sum of a 1-D array.

    The array is padded with zeros and read as rows of ``lanes`` entries;
    every lane runs its own Kahan recurrence, then the lanes are folded with
    :class:`CompensatedSum` in lane order.

    Returns
    -------
    complex
    """
    values = np.asarray(values, dtype=np.complex128)
    pad = (-len(values)) % lanes
    if pad:
        values = np.concatenate([values, np.zeros(pad, dtype=np.complex128)])
    total = np.zeros(lanes, dtype=np.complex128)
    correction = np.zeros(lanes, dtype=np.complex128)
    for row in values.reshape(-1, lanes):
        y = row - correction
        t = total + y
        correction = (t - total) - y
        total = t
    accumulator = CompensatedSum()
    for value in total:
        accumulator.add(value)
    for value in correction:
        accumulator.add(-value)
    return accumulator.value


def validate_checkpoints(checkpoints):
    """
    Check that checkpoints are a nonempty, strictly increasing list of N >= 1.

    Returns
    -------
    tuple of int

    Raises
    ------
    ValidationError
    """
    checkpoints = tuple(int(_) for _ in checkpoints)
    if not checkpoints:
        raise ValidationError("at least one checkpoint is required")
    if checkpoints[0] < 1 or any(a >= b for a, b in zip(checkpoints, checkpoints[1:])):
        raise ValidationError(
            "checkpoints must be strictly increasing and >= 1: %s" % (checkpoints,)
        )
    return checkpoints


def segments(checkpoints, block_size):
    """
    Half-open index ranges ``[start, stop)`` covering ``1 .. max(checkpoints)``.

    Ranges end at every multiple of ``block_size`` (counted from n = 1) and
    at every checkpoint.
    """
    cuts = set(range(1 + block_size, checkpoints[-1] + 1, block_size))
    cuts.update(N + 1 for N in checkpoints)
    bounds = [1] + sorted(cuts)
    return list(zip(bounds, bounds[1:]))


def checkpoint_sums(terms, checkpoints, workers=1, block_size=1 << 16, lanes=256):
    """
    Sums ``sum_{n=1}^{N} terms(n)`` for every checkpoint N.

    Parameters
    ----------
    terms: callable
        ``terms(start, stop)`` returns a complex array of the terms for
        ``n = start .. stop-1``; must be safe to call from several threads.
    checkpoints: sequence of int
    workers: int
        Threads used for the segment sums
    block_size: int
    lanes: int

    Returns
    -------
    list of complex
    """
    checkpoints = validate_checkpoints(checkpoints)
    if block_size < 1 or workers < 1:
        raise ValidationError("block_size and workers must be positive")
    pieces = segments(checkpoints, block_size)
    logger.debug(
        "%d segments up to N=%d on %d worker(s)", len(pieces), checkpoints[-1], workers
    )

    def segment_sum(piece):
        return lane_sum(terms(*piece), lanes)

    if workers == 1:
        sums = list(map(segment_sum, pieces))
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            sums = list(executor.map(segment_sum, pieces))
    accumulator = CompensatedSum()
    results = []
    wanted = set(checkpoints)
    for (_, stop), value in zip(pieces, sums):
        accumulator.add(value)
        if stop - 1 in wanted:
            results.append(accumulator.value)
    return results
