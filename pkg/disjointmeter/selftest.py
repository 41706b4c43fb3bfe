# -*- coding: utf-8 -*-
"""
Invariant checks on built-in instances.

Each check is a function of a seed that raises InvariantViolation (or
another disjointmeter error) when the invariant fails.
"""

from collections import namedtuple
from fractions import Fraction
from math import gcd
import logging

from disjointmeter.dynamics import (
    AffineTorusFlow,
    TorusPoint,
    apply,
    conjugate_flow,
    evaluate_mod1,
    iterate,
    orbit_polynomials,
    parabolic_conjugator,
    parabolic_fixed_point,
    push_forward,
    random_unipotent,
    triangularize,
)
from disjointmeter.exceptions import DisjointMeterError, check_invariant
from disjointmeter.harness import (
    GeometricSequence,
    geometric_params,
    lambda_moment,
    mobius_sieve,
    mobius_trial,
)
from disjointmeter.lattice import (
    IntMatrix,
    bezout,
    complete_to_unimodular,
    det,
    matmul,
    unimodular_inverse,
)
from disjointmeter.rng import SplitMix64

logger = logging.getLogger(__name__)

__all__ = ["CHECKS", "SelftestResult", "run_selftest"]

SelftestResult = namedtuple("SelftestResult", ["name", "passed", "detail"])


def _random_point(rng, d, denominator=12):
    return TorusPoint.of(
        Fraction(rng.randint(0, denominator - 1), denominator) for _ in range(d)
    )


def check_lattice(seed):
    rng = SplitMix64(seed)
    for _ in range(200):
        p, q = rng.randint(-50, 50), rng.randint(1, 50)
        while gcd(p, q) != 1:
            p += 1
        r, s = bezout(p, q)
        check_invariant(p * r - q * s == 1, ("bezout", p, q))
        v = [p, q, rng.randint(-9, 9)]
        C = complete_to_unimodular(v)
        check_invariant(det(C.matrix) == 1 and C.matrix.column(0) == tuple(v), v)


def check_triangularize(seed):
    for i in range(40):
        d = 2 + i % 4
        A = random_unipotent(d, seed + i, 3)
        form = triangularize(A)
        check_invariant(form.P.determinant == 1, A)
        P_inverse = unimodular_inverse(form.P).matrix
        check_invariant(matmul(matmul(P_inverse, A), form.P.matrix) == form.B, A)


def check_parabolic(seed):
    rng = SplitMix64(seed)
    checked = 0
    while checked < 20:
        A = random_unipotent(2, rng.next_u64(), 3)
        if A.entries[1][0] == 0:
            continue
        p, q = parabolic_fixed_point(A)
        (a, b), (c, d) = A.entries
        check_invariant((a - 1) * p + b * q == 0 and c * p + (d - 1) * q == 0, A)
        form = parabolic_conjugator(A)
        check_invariant(form.B.entries[1][0] == 0 and form.B.entries[0][0] == 1, A)
        checked += 1


def check_conjugacy(seed):
    rng = SplitMix64(seed)
    for i in range(10):
        d = 2 + i % 3
        A = random_unipotent(d, seed + i, 2)
        flow = AffineTorusFlow.create(A, _random_point(rng, d))
        form = triangularize(A)
        conjugated = conjugate_flow(flow, form.P)
        for _ in range(10):
            x = _random_point(rng, d)
            left = apply(flow, push_forward(form.P, x))
            right = push_forward(form.P, apply(conjugated, x))
            check_invariant(left == right, (A, x))


def check_orbit(seed):
    rng = SplitMix64(seed)
    for trial in range(10):
        d = 2 + trial % 3
        B = IntMatrix.from_rows(
            [
                [int(i == j) if j <= i else rng.randint(-3, 3) for j in range(d)]
                for i in range(d)
            ]
        )
        flow = AffineTorusFlow.create(B, _random_point(rng, d))
        x = _random_point(rng, d)
        orbit = orbit_polynomials(flow.A, flow.a, x)
        y = x
        for n in range(60):
            expected = tuple(evaluate_mod1(p, n) for p in orbit.for_n(n))
            check_invariant(expected == y.coords, (B, n))
            y = apply(flow, y)
        check_invariant(iterate(flow, x, 60) == y, (B, x))


def check_sieve(seed):
    mu = mobius_sieve(10000)
    rng = SplitMix64(seed)
    for _ in range(500):
        n = rng.randint(1, 10000)
        check_invariant(mu[n] == mobius_trial(n), n)


def check_geometric_moment(seed):
    seq = GeometricSequence(geometric_params("sqrt(2)", "3/2"))
    stats = lambda_moment(seq, 2, 2000)
    check_invariant(abs(stats.K_estimate - 1) < 1e-12, stats)


CHECKS = (
    ("lattice", check_lattice),
    ("triangularize", check_triangularize),
    ("parabolic", check_parabolic),
    ("conjugacy", check_conjugacy),
    ("orbit", check_orbit),
    ("sieve", check_sieve),
    ("geometric_moment", check_geometric_moment),
)


def run_selftest(seed=0):
    """
    Run every check.

    Returns
    -------
    list of SelftestResult
    """
    results = []
    for name, check in CHECKS:
        try:
            check(seed)
        except DisjointMeterError as e:
            logger.debug("selftest %s failed: %r", name, e)
            results.append(SelftestResult(name, False, repr(e)))
        else:
            results.append(SelftestResult(name, True, ""))
    return results
