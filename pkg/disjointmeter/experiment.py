# -*- coding: utf-8 -*-
"""
Experiments built from validated config documents.

A config names one of three experiments: ``disjoint`` (disjointness series
of a flow and an observable), ``weyl`` (a single Weyl sum) or ``probe`` (an
oscillation probe). See ``docs/config.rst`` for the schema.
"""

from collections import namedtuple
import logging

from disjointmeter.codec import (
    flow_from_json,
    point_from_json,
    polynomial_from_json,
    real_value,
)
from disjointmeter.harness import (
    PhaseSpec,
    TrigPolynomial,
    decay_report,
    disjointness_series,
    oscillation_probe,
    random_trig_polynomial,
    weights_from_config,
    weyl_sum,
    write_probe_csv,
    write_series_csv,
)

logger = logging.getLogger(__name__)

__all__ = [
    "ExperimentResult",
    "observable_from_config",
    "phase_from_config",
    "run_experiment",
]


class ExperimentResult(
    namedtuple("ExperimentResult", ["experiment", "name", "seed", "result"])
):
    """
    Outcome of :func:`run_experiment`.

    Parameters and Attributes
    -------------------------
    experiment: str
        ``disjoint``, ``weyl`` or ``probe``
    name: str or None
    seed: int
    result: SumSeries or ProbeReport
    """

    __slots__ = ()

    def write_csv(self, out):
        """Write the series (or every probe entry) as CSV."""
        if self.experiment == "probe":
            write_probe_csv(self.result, out)
        else:
            write_series_csv(self.result, out)

    def summary(self):
        """dict: JSON-ready description of the run, seed included."""
        summary = {
            "experiment": self.experiment,
            "name": self.name,
            "seed": self.seed,
        }
        if self.experiment == "probe":
            summary["aggregate"] = [
                {"N": _.N, "max": _.max, "median": _.median}
                for _ in self.result.aggregate()
            ]
            return summary
        summary["descriptor"] = self.result.descriptor
        summary["magnitudes"] = {
            str(_.N): _.magnitude for _ in self.result.checkpoints
        }
        if len(self.result.checkpoints) > 1:
            report = decay_report(self.result)
            summary["ratios"] = list(report.ratios)
            summary["monotone"] = report.monotone
        return summary


def observable_from_config(section, dimension, seed):
    """
    TrigPolynomial from the ``observable`` section.

    Either explicit ``terms`` ``[{"k": [...], "re": .., "im": ..}]`` or a
    coefficient ``box`` filled with seeded random amplitudes.
    """
    if "terms" in section:
        return TrigPolynomial(
            dimension,
            [(_["k"], complex(_["re"], _["im"])) for _ in section["terms"]],
        )
    return random_trig_polynomial(section["box"], section.get("seed", seed))


def phase_from_config(section):
    """PhaseSpec from the ``phase`` section."""
    if section["kind"] == PhaseSpec.RATIONAL:
        return PhaseSpec.rational(polynomial_from_json(section["coefficients"]))
    return PhaseSpec.real(real_value(_) for _ in section["coefficients"])


def run_experiment(config, workers=None, engine=None):
    """
    Run a validated experiment config.

    Parameters
    ----------
    config: dict
        Output of :func:`disjointmeter.config.load_experiment`
    workers: int, optional
        Overrides the config's worker count
    engine: str, optional
        Overrides the config's engine (``disjoint`` only)

    Returns
    -------
    ExperimentResult
    """
    experiment = config["experiment"]
    seed = config.get("seed", 0)
    weights = weights_from_config(config["weights"])
    checkpoints = config.get("checkpoints")
    workers = workers or config.get("workers")
    logger.info("running %s experiment %s", experiment, config.get("name", ""))
    if experiment == "disjoint":
        flow = flow_from_json(config["flow"])
        x = point_from_json(config["point"])
        f = observable_from_config(config["observable"], flow.dimension, seed)
        result = disjointness_series(
            weights,
            flow,
            f,
            x,
            checkpoints,
            engine=engine or config.get("engine", "exact"),
            workers=workers,
        )
    elif experiment == "weyl":
        result = weyl_sum(
            weights, phase_from_config(config["phase"]), checkpoints, workers
        )
    else:
        probe = config["probe"]
        result = oscillation_probe(
            weights,
            probe["order"],
            t_grid=probe.get("t_grid"),
            mode=probe.get("mode", "weak"),
            checkpoints=checkpoints,
            samples=probe.get("samples"),
            seed=seed,
            workers=workers,
        )
    return ExperimentResult(experiment, config.get("name"), seed, result)
