# -*- coding: utf-8 -*-
"""Exceptions raised by disjointmeter."""


class DisjointMeterError(ValueError):
    """Base class of all disjointmeter errors."""


class ValidationError(DisjointMeterError):
    """Invalid document, option or parameter (CLI exit code 1)."""


class ComputationError(DisjointMeterError):
    """A mathematical precondition failed during computation (CLI exit code 2)."""


class NotCoprime(ComputationError):
    pass


class NotSquare(ComputationError):
    pass


class TrivialKernel(ComputationError):
    pass


class NotPrimitive(ComputationError):
    pass


class NotUnipotent(ComputationError):
    pass


class NotUnimodular(ComputationError):
    pass


class AlreadyTriangular(ComputationError):
    pass


class DimensionMismatch(ComputationError):
    pass


class WrongDimension(ComputationError):
    pass


class NotUpperUnipotent(ComputationError):
    pass


class InsufficientPrecision(ComputationError):
    pass


class EngineUnavailable(ComputationError):
    pass


class InvariantViolation(ComputationError):
    pass


def check_invariant(condition, detail):
    """
    Raise InvariantViolation with ``detail`` unless ``condition`` holds.

    Stays active under ``python -O``, unlike ``assert``.
    """
    if not condition:
        raise InvariantViolation(detail)
