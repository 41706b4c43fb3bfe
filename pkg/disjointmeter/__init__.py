# -*- coding: utf-8 -*-

"""Top-level package for disjointmeter."""

__version__ = "0.1.0"

from .exceptions import ComputationError, DisjointMeterError, ValidationError
from .lattice import IntMatrix
from .dynamics import (
    AffineTorusFlow,
    TorusPoint,
    orbit_polynomials,
    triangularize,
)
from .harness import (
    MobiusSequence,
    PhaseSpec,
    TrigPolynomial,
    disjointness_series,
    oscillation_probe,
    weyl_sum,
)

__all__ = [
    "AffineTorusFlow",
    "ComputationError",
    "DisjointMeterError",
    "IntMatrix",
    "MobiusSequence",
    "PhaseSpec",
    "TorusPoint",
    "TrigPolynomial",
    "ValidationError",
    "disjointness_series",
    "orbit_polynomials",
    "oscillation_probe",
    "triangularize",
    "weyl_sum",
]
