# -*- coding: utf-8 -*-

"""Tests for Weyl sums, oscillation probes and disjointness series."""

from fractions import Fraction
import io
import logging
import math

import numpy as np
import pytest

from disjointmeter.dynamics import (
    AffineTorusFlow,
    TorusPoint,
    conjugate_flow,
    orbit_polynomials,
    phase_polynomial,
    push_forward,
    triangularize,
)
from disjointmeter.exceptions import (
    ComputationError,
    DimensionMismatch,
    EngineUnavailable,
    ValidationError,
)
from disjointmeter.harness import (
    CharacterSequence,
    Checkpoint,
    ConstantSequence,
    FLOAT_ENGINE_MAX_DIM,
    GeometricSequence,
    MobiusSequence,
    PhaseSpec,
    SumSeries,
    TrigPolynomial,
    decay_report,
    default_t_grid,
    disjointness_series,
    geometric_params,
    mertens,
    mobius_sieve,
    oscillation_probe,
    phase_fractions,
    random_trig_polynomial,
    read_series_csv,
    triangle_bound,
    triangle_bounds,
    weyl_sum,
    write_probe_csv,
    write_series_csv,
)
from disjointmeter.harness.weyl import _check_triangle_bound
from disjointmeter.lattice import IntMatrix

F = Fraction

GOLDEN = (math.sqrt(5) - 1) / 2

PLANAR_FLOW = AffineTorusFlow.create([[1, 1], [0, 1]], [F(0), F(1, 2)])

ORIGIN = TorusPoint.zero(2)


def _series(*magnitudes):
    return SumSeries(
        checkpoints=tuple(
            Checkpoint(N=10 ** (i + 1), average=complex(m), magnitude=m)
            for i, m in enumerate(magnitudes)
        ),
        weights_kind="test",
        descriptor="",
    )


# ---------- phases ----------


def test_phase_fractions_rational():
    phase = PhaseSpec.rational([F(1, 3), F(1, 2), F(5, 7)])
    polynomial = phase.polynomial
    expected = [float(polynomial(n) % 1) for n in range(1, 50)]
    assert list(phase_fractions(phase, 1, 50)) == expected


def test_phase_fractions_large_denominator():
    q = 2 ** 61 - 1
    phase = PhaseSpec.rational([0, F(1, q), F(3, q)])
    expected = [float((F(n, q) + F(3 * n * n, q)) % 1) for n in range(1, 20)]
    assert list(phase_fractions(phase, 1, 20)) == expected


def test_phase_fractions_parity_split():
    phase = PhaseSpec.rational([0, F(1, 4)], [F(1, 2)])
    values = phase_fractions(phase, 1, 7)
    assert list(values) == [0.5, 0.5, 0.5, 0.0, 0.5, 0.5]


def test_phase_fractions_real_matches_rational_on_dyadics():
    rational = PhaseSpec.rational([F(1, 8), F(3, 4), F(1, 2)])
    real = PhaseSpec.real([0.125, 0.75, 0.5])
    assert list(phase_fractions(real, 1, 1000)) == list(
        phase_fractions(rational, 1, 1000)
    )


def test_phase_spec():
    assert PhaseSpec.real([0.5, 0.0, 0.0]).degree == 0
    assert PhaseSpec.real([0.5, 0.1, 0.0]).degree == 1
    assert PhaseSpec.rational([0, 0, F(1, 3)], [F(1, 2)]).degree == 2
    assert PhaseSpec.rational([0, F(1, 2)]).describe() == "rational[0,1/2]"


# ---------- weyl_sum ----------


def test_weyl_sum_trivial():
    series = weyl_sum(ConstantSequence(1), PhaseSpec.rational([0]), [100])
    assert series.checkpoints[0].average == 1
    assert series.weights_kind == "constant"
    alternating = weyl_sum(
        ConstantSequence(1), PhaseSpec.rational([0, F(1, 2)]), [100]
    )
    assert alternating.checkpoints[0].magnitude == pytest.approx(0, abs=1e-12)


def test_weyl_sum_mobius_mean():
    series = weyl_sum(MobiusSequence(), PhaseSpec.rational([0]), [10 ** 6])
    M = int(mertens(mobius_sieve(10 ** 6))[10 ** 6])
    assert series.checkpoints[0].magnitude == pytest.approx(abs(M) / 10 ** 6)
    assert series.checkpoints[0].magnitude < 1e-3


def test_weyl_sum_geometric_series():
    theta = F(1, 7)
    N = 500
    series = weyl_sum(ConstantSequence(1), PhaseSpec.rational([0, theta]), [N])
    expected = sum(np.exp(2j * np.pi * float(n * theta % 1)) for n in range(1, N + 1))
    assert series.checkpoints[0].average == pytest.approx(expected / N, abs=1e-12)


def test_weyl_sum_is_worker_independent():
    phase = PhaseSpec.real([0.0, math.sqrt(2), math.pi / 7])
    checkpoints = [1000, 20000, 50000]
    single = weyl_sum(MobiusSequence(), phase, checkpoints, 1, 4096)
    for workers in (2, 8):
        assert weyl_sum(MobiusSequence(), phase, checkpoints, workers, 4096) == single


def test_weyl_sum_errors():
    with pytest.raises(ValidationError):
        weyl_sum(ConstantSequence(1), PhaseSpec.rational([0]), [])
    with pytest.raises(ValidationError):
        weyl_sum(ConstantSequence(1), PhaseSpec.rational([0] * 9 + [1]), [10])
    with pytest.raises(ValidationError):
        weyl_sum(ConstantSequence(1), PhaseSpec.real([0.0, 0.1]), [10 ** 9])


# ---------- oscillation probes ----------


def test_default_t_grid():
    grid = default_t_grid()
    assert len(grid) == 22
    assert grid[0] == 0 and grid[1] == F(1, 40)
    assert grid[-1] == pytest.approx(GOLDEN)
    assert all(0 <= t < 1 for t in grid)


def test_probe_constant_is_not_oscillating():
    report = oscillation_probe(ConstantSequence(1), 1, ["0"], checkpoints=[10, 100])
    (entry,) = report.entries
    assert entry.label == "k=1,t=0"
    assert entry.series.magnitudes == (1.0, 1.0)


def test_probe_character_resonance():
    N = 1000
    report = oscillation_probe(
        CharacterSequence(GOLDEN), 1, [1 - GOLDEN, "1/4", "1/2"], checkpoints=[N]
    )
    resonant, *others = report.entries
    assert resonant.series.checkpoints[0].magnitude == pytest.approx(1, abs=1e-9)
    for entry, t in zip(others, (0.25, 0.5)):
        bound = 1 / (N * abs(math.sin(math.pi * (GOLDEN + t))))
        assert entry.series.checkpoints[0].magnitude <= bound * (1 + 1e-9)


def test_probe_aggregate():
    report = oscillation_probe(
        ConstantSequence(1), 2, ["0", "1/2"], checkpoints=[10, 100]
    )
    assert len(report.entries) == 4
    aggregate = report.aggregate()
    assert [_.N for _ in aggregate] == [10, 100]
    assert all(_.max == pytest.approx(1) for _ in aggregate)


def test_probe_mobius_higher_order_decay():
    report = oscillation_probe(
        MobiusSequence(), 2, checkpoints=[10 ** 4, 10 ** 5, 10 ** 6]
    )
    squares = [_ for _ in report.entries if _.label.startswith("k=2,")]
    assert len(squares) == 22
    magnitudes = np.array([_.series.magnitudes for _ in squares])
    medians = np.median(magnitudes, axis=0)
    assert medians[2] <= medians[0] / 3
    assert magnitudes[:, 2].max() < 0.05


def test_probe_strong_geometric():
    weights = GeometricSequence(geometric_params("sqrt(2)", "3/2"))
    report = oscillation_probe(
        weights, 3, mode="strong", checkpoints=[10 ** 5], samples=16, seed=11
    )
    assert len(report.entries) == 16
    assert all(_.label.startswith("poly") for _ in report.entries)
    assert report.aggregate()[0].max < 0.1


def test_probe_strong_is_seeded():
    def magnitudes(seed):
        report = oscillation_probe(
            ConstantSequence(1), 2, mode="strong", checkpoints=[50], seed=seed
        )
        return [_.series.magnitudes for _ in report.entries]

    assert magnitudes(3) == magnitudes(3)
    assert magnitudes(3) != magnitudes(4)


def test_probe_errors():
    seq = ConstantSequence(1)
    with pytest.raises(ValidationError):
        oscillation_probe(seq, 0, checkpoints=[10])
    with pytest.raises(ValidationError):
        oscillation_probe(seq, 9, checkpoints=[10])
    with pytest.raises(ValidationError):
        oscillation_probe(seq, 1, ["1"], checkpoints=[10])
    with pytest.raises(ValidationError):
        oscillation_probe(seq, 1, mode="medium", checkpoints=[10])


# ---------- trigonometric polynomials ----------


def test_trig_polynomial():
    f = TrigPolynomial(2, {(1, 0): 1, (0, 1): 2j, (3, 3): 0})
    assert len(f.terms) == 2
    assert f.sup_bound() == pytest.approx(3)
    x = TorusPoint.of([F(1, 4), F(1, 2)])
    assert f.evaluate(x) == pytest.approx(1j - 2j)
    assert f.evaluate_many(np.array([[0.25, 0.5]]))[0] == pytest.approx(-1j)
    assert TrigPolynomial.constant(2).evaluate(x) == 1
    with pytest.raises(DimensionMismatch):
        TrigPolynomial(2, {(1,): 1})


def test_trig_polynomial_box():
    f = TrigPolynomial(2, {(1, 0): 1, (-2, 3): 1j})
    assert f.box == ((-2, 1), (0, 3))
    assert TrigPolynomial(2, {}).box == ((0, 0), (0, 0))
    boxed = TrigPolynomial(2, {(1, 0): 1}, [(-2, 2), (-2, 2)])
    assert boxed.box == ((-2, 2), (-2, 2))
    assert boxed == TrigPolynomial.character((1, 0))
    assert random_trig_polynomial([(-1, 2), (0, 1)], seed=3).box == ((-1, 2), (0, 1))
    shear = IntMatrix.from_rows([[1, 0], [1, 1]])
    assert f.pullback(shear).box == ((1, 1), (0, 3))
    with pytest.raises(ValidationError):
        TrigPolynomial(2, {(3, 0): 1}, [(-2, 2), (-2, 2)])
    with pytest.raises(ValidationError):
        TrigPolynomial(1, {(0,): 1}, [(1, -1)])
    with pytest.raises(DimensionMismatch):
        TrigPolynomial(2, {(0, 0): 1}, [(-1, 1)])


def test_trig_polynomial_pullback():
    P = triangularize(IntMatrix.from_rows([[1, 0], [1, 1]])).P
    f = random_trig_polynomial([(-1, 1), (-1, 1)], seed=5)
    g = f.pullback(P)
    for x in (TorusPoint.of([F(1, 3), F(2, 5)]), TorusPoint.of([F(5, 8), 0])):
        assert g.evaluate(x) == pytest.approx(f.evaluate(push_forward(P, x)))


def test_random_trig_polynomial():
    f = random_trig_polynomial([(-2, 2), (-2, 2)], seed=2017)
    assert f == random_trig_polynomial([(-2, 2), (-2, 2)], seed=2017)
    assert len(f.terms) == 25
    assert all(abs(a) <= 1 for _, a in f.terms)
    with pytest.raises(ValidationError):
        random_trig_polynomial([(2, -2)], seed=0)


def test_triangle_bound():
    f = TrigPolynomial(1, {(1,): 3, (2,): 4j})
    assert triangle_bound(ConstantSequence(1), f, 100) == pytest.approx(7)
    assert triangle_bound(MobiusSequence(), f, 10) == pytest.approx(0.7 * 7)
    bounds = triangle_bounds(MobiusSequence(), f, [10, 100])
    assert bounds == [
        triangle_bound(MobiusSequence(), f, 10),
        triangle_bound(MobiusSequence(), f, 100),
    ]
    assert bounds[1] == pytest.approx(0.61 * 7)


# ---------- disjointness ----------


def test_disjointness_trivial():
    f = random_trig_polynomial([(-1, 1), (-1, 1)], seed=1)
    zero = disjointness_series(ConstantSequence(0), PLANAR_FLOW, f, ORIGIN, [10, 100])
    assert zero.magnitudes == (0.0, 0.0)
    one = TrigPolynomial.constant(2)
    mobius = disjointness_series(MobiusSequence(), PLANAR_FLOW, one, ORIGIN, [10 ** 6])
    assert mobius.checkpoints[0].magnitude == pytest.approx(212 / 10 ** 6)


def test_disjointness_single_character():
    f = TrigPolynomial.character((1, 0))
    series = disjointness_series(
        MobiusSequence(), PLANAR_FLOW, f, ORIGIN, [10 ** 4, 10 ** 6]
    )
    phase = PhaseSpec.rational([0, F(-1, 4), F(1, 4)])
    expected = weyl_sum(MobiusSequence(), phase, [10 ** 4, 10 ** 6])
    assert series.magnitudes == expected.magnitudes
    assert series.checkpoints[1].magnitude < 0.05
    assert series.checkpoints[1].magnitude < series.checkpoints[0].magnitude


def test_disjointness_mobius_unipotent():
    checkpoints = [10 ** 4, 10 ** 6]
    f = random_trig_polynomial([(-2, 2), (-2, 2)], seed=2017)
    exact = disjointness_series(MobiusSequence(), PLANAR_FLOW, f, ORIGIN, checkpoints)
    assert exact.checkpoints[1].magnitude < 0.05
    assert exact.checkpoints[1].magnitude < exact.checkpoints[0].magnitude

    float_ = disjointness_series(
        MobiusSequence(), PLANAR_FLOW, f, ORIGIN, checkpoints, engine="float"
    )
    for a, b in zip(exact.checkpoints, float_.checkpoints):
        assert abs(a.average - b.average) < 1e-6

    orbit = orbit_polynomials(PLANAR_FLOW.A, PLANAR_FLOW.a, ORIGIN)
    total = np.zeros(len(checkpoints), dtype=np.complex128)
    for k, a in f.terms:
        odd = phase_polynomial(k, orbit, 1) if orbit.parity_split else None
        phase = PhaseSpec.rational(phase_polynomial(k, orbit), odd)
        sums = weyl_sum(MobiusSequence(), phase, checkpoints)
        total += a * np.array([_.average for _ in sums.checkpoints])
    for checkpoint, expected in zip(exact.checkpoints, total):
        assert abs(checkpoint.average - expected) < 1e-10


def test_disjointness_is_worker_independent():
    f = random_trig_polynomial([(-2, 2), (-2, 2)], seed=2017)
    outputs = []
    for workers in (1, 2, 8):
        series = disjointness_series(
            MobiusSequence(),
            PLANAR_FLOW,
            f,
            ORIGIN,
            [1000, 10000, 100000],
            workers=workers,
            block_size=4096,
        )
        out = io.StringIO()
        write_series_csv(series, out)
        outputs.append(out.getvalue())
    assert outputs[0] == outputs[1] == outputs[2]


def test_disjointness_conjugation_invariance():
    flow = AffineTorusFlow.create([[1, 0], [1, 1]], [F(3, 8), F(1, 4)])
    form = triangularize(flow.A)
    f = random_trig_polynomial([(-1, 1), (-1, 1)], seed=9)
    x = TorusPoint.of([F(1, 8), F(5, 8)])
    checkpoints = [1000, 5000]
    conjugated = conjugate_flow(flow, form.P)
    left = disjointness_series(
        MobiusSequence(), flow, f, push_forward(form.P, x), checkpoints
    )
    right = disjointness_series(
        MobiusSequence(), conjugated, f.pullback(form.P), x, checkpoints
    )
    for a, b in zip(left.checkpoints, right.checkpoints):
        assert abs(a.average - b.average) < 1e-9
    float_ = disjointness_series(
        MobiusSequence(),
        flow,
        f,
        push_forward(form.P, x),
        checkpoints,
        engine="float",
    )
    for a, b in zip(left.checkpoints, float_.checkpoints):
        assert abs(a.average - b.average) < 1e-6


def test_disjointness_negative_unipotent():
    flow = AffineTorusFlow.create([[-1, 1], [0, -1]], [F(1, 2), F(1, 4)])
    f = random_trig_polynomial([(-1, 1), (-1, 1)], seed=4)
    x = TorusPoint.of([F(1, 8), F(3, 8)])
    exact = disjointness_series(ConstantSequence(1), flow, f, x, [100, 1000])
    float_ = disjointness_series(
        ConstantSequence(1), flow, f, x, [100, 1000], engine="float"
    )
    for a, b in zip(exact.checkpoints, float_.checkpoints):
        assert abs(a.average - b.average) < 1e-9


def test_disjointness_errors():
    f = TrigPolynomial.character((1, 0))
    with pytest.raises(DimensionMismatch):
        disjointness_series(
            MobiusSequence(), PLANAR_FLOW, TrigPolynomial.constant(3), ORIGIN, [10]
        )
    with pytest.raises(ValidationError):
        disjointness_series(MobiusSequence(), PLANAR_FLOW, f, ORIGIN, [10], "fast")
    irrational = AffineTorusFlow.create([[1, 1], [0, 1]], [math.sqrt(2) - 1, 0.0])
    with pytest.raises(EngineUnavailable):
        disjointness_series(MobiusSequence(), irrational, f, ORIGIN, [10])
    series = disjointness_series(
        MobiusSequence(), irrational, f, ORIGIN, [10], engine="float"
    )
    assert series.checkpoints[0].magnitude <= 0.7
    cat = AffineTorusFlow.create([[2, 1], [1, 1]])
    with pytest.raises(EngineUnavailable):
        disjointness_series(MobiusSequence(), cat, f, ORIGIN, [10])
    assert isinstance(EngineUnavailable("x"), ComputationError)


def test_triangle_bound_violation():
    f = TrigPolynomial.character((1,))
    fake = _series(2.0)
    with pytest.raises(ComputationError):
        _check_triangle_bound(ConstantSequence(1), f, fake, [10], 1024)
    _check_triangle_bound(ConstantSequence(1), f, _series(1.0), [10], 1024)


def test_float_engine_warns_on_high_dimension(caplog):
    A = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
    f = TrigPolynomial.character((0, 0, 0, 1))
    x = TorusPoint.zero(4)
    assert FLOAT_ENGINE_MAX_DIM == 3
    with caplog.at_level(logging.WARNING, logger="disjointmeter.harness.weyl"):
        dyadic = AffineTorusFlow.create(A, [0, 0, 0, F(1, 8)])
        disjointness_series(ConstantSequence(1), dyadic, f, x, [10], "float")
        assert "non-dyadic" not in caplog.text
        third = AffineTorusFlow.create(A, [0, 0, 0, F(1, 3)])
        disjointness_series(ConstantSequence(1), third, f, x, [10], "float")
        assert "non-dyadic data in dimension 4" in caplog.text
    caplog.clear()
    planar = AffineTorusFlow.create([[1, 1], [0, 1]], [0, F(1, 3)])
    with caplog.at_level(logging.WARNING, logger="disjointmeter.harness.weyl"):
        g = TrigPolynomial.character((0, 1))
        disjointness_series(ConstantSequence(1), planar, g, ORIGIN, [10], "float")
    assert "non-dyadic" not in caplog.text


# ---------- reports ----------


def test_decay_report():
    flat = decay_report(_series(1.0, 1.0))
    assert flat.ratios == (1.0,) and not flat.monotone
    decaying = decay_report(_series(0.1, 0.01))
    assert decaying.ratios[0] == pytest.approx(10)
    assert decaying.monotone
    assert decaying.rows == ((10, 0.1), (100, 0.01))
    assert decay_report(_series(0.1, 0.0)).ratios == (math.inf,)
    with pytest.raises(ValidationError):
        decay_report(_series(0.1))


def test_decay_report_mobius_mean():
    checkpoints = [10 ** 4, 10 ** 5, 10 ** 6]
    series = weyl_sum(MobiusSequence(), PhaseSpec.rational([0]), checkpoints)
    assert decay_report(series).monotone


def test_series_csv(tmpdir):
    series = weyl_sum(
        MobiusSequence(), PhaseSpec.real([0.0, math.sqrt(2)]), [10, 100, 1000]
    )
    filename = str(tmpdir.join("series.csv"))
    write_series_csv(series, filename)
    with open(filename) as f:
        assert f.readline() == "N,re,im,mag\n"
    assert read_series_csv(filename) == series.checkpoints
    bad = tmpdir.join("bad.csv")
    bad.write("n,value\n1,2\n")
    with pytest.raises(ValidationError):
        read_series_csv(str(bad))
    bad.write("N,re,im,mag\n1,x,0,0\n")
    with pytest.raises(ValidationError):
        read_series_csv(str(bad))


def test_probe_csv():
    report = oscillation_probe(
        ConstantSequence(1), 1, ["0", "1/2"], checkpoints=[10, 20]
    )
    out = io.StringIO()
    write_probe_csv(report, out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "label,N,re,im,mag"
    assert len(lines) == 5
    assert lines[1].startswith('"k=1,t=0",10,')
