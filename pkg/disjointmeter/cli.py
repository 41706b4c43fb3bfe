# -*- coding: utf-8 -*-
"""Console script for disjointmeter."""

import io
import json
import logging
import os
import sys

import click
import yaml

import disjointmeter
from disjointmeter.codec import (
    flow_from_json,
    load_document,
    matrix_from_json,
    matrix_to_json,
    parse_coordinate,
    polynomial_to_json,
)
from disjointmeter.config import example_path, load_experiment
from disjointmeter.dynamics import (
    TorusPoint,
    classify_flow_2x2,
    orbit_polynomials,
    triangularize as triangularize_matrix,
)
from disjointmeter.exceptions import ComputationError, ValidationError
from disjointmeter.experiment import run_experiment
from disjointmeter.harness import (
    GeometricSequence,
    geometric_params,
    lambda_moment,
    mertens,
    mobius_sieve,
)
from disjointmeter.selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_VALIDATION = 1
EXIT_COMPUTATION = 2


def _echo_results(output_format, results):
    """Echo results in desired output format."""
    if output_format == "yaml":
        click.echo(yaml.safe_dump(results, sort_keys=False), nl=False)
    else:
        click.echo(json.dumps(results, indent=2))


def _get_version():
    """Get disjointmeter version."""
    from disjointmeter import __version__ as version

    return version


def _parse_point(text):
    """TorusPoint from ``"x1,x2,..."``."""
    return TorusPoint.of(parse_coordinate(_.strip()) for _ in text.split(","))


def _load_config(config_file, example, experiment):
    if bool(config_file) == bool(example):
        raise ValidationError("give exactly one of --config and --example")
    config = load_experiment(config_file or example_path(example))
    if config["experiment"] != experiment:
        raise ValidationError(
            "config describes a %s experiment, not %s"
            % (config["experiment"], experiment)
        )
    return config


class DisjointMeterGroup(click.Group):
    """
    Group that reports errors with stable prefixes.

    ``E_VALIDATION`` (exit 1) for usage and validation errors,
    ``E_COMPUTE`` (exit 2) for failed mathematical preconditions.
    """

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            click.echo("E_VALIDATION: %s" % e.format_message(), err=True)
            ctx.exit(EXIT_VALIDATION)
        except ValidationError as e:
            click.echo("E_VALIDATION: %s" % e, err=True)
            ctx.exit(EXIT_VALIDATION)
        except ComputationError as e:
            click.echo("E_COMPUTE: %s: %s" % (type(e).__name__, e), err=True)
            ctx.exit(EXIT_COMPUTATION)


@click.group(cls=DisjointMeterGroup)
@click.version_option(version=_get_version())
@click.option(
    "--verbose",
    "-v",
    count=True,
    envvar="DISJOINTMETER_VERBOSE",
    help="Log progress to stderr (-vv for debug records).",
)
def main(verbose=0):
    """Exact torus dynamics and Weyl-sum disjointness experiments."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )


_output_format = click.option(
    "--output_format",
    "-of",
    type=click.Choice(["json", "yaml"]),
    default="json",
    envvar="DISJOINTMETER_OUTPUT_FORMAT",
    help="Output format.",
)


# ---------- info ----------


@click.command("info", help="Report disjointmeter version and module path.")
def info():
    """Show disjointmeter version."""
    click.echo("disjointmeter version %s" % _get_version())
    click.echo("- loaded from path: %s" % os.path.dirname(disjointmeter.__file__))


# ---------- triangularize ----------


@click.command("triangularize", help="Upper-triangular normal form of a matrix.")
@click.argument("matrix_file", type=click.Path(exists=True, dir_okay=False))
@_output_format
def triangularize(matrix_file, output_format):
    """Echo P, B and the sign with ``P**-1 A P = B``."""
    form = triangularize_matrix(matrix_from_json(load_document(matrix_file)))
    _echo_results(
        output_format,
        {
            "P": matrix_to_json(form.P),
            "B": matrix_to_json(form.B),
            "sign": form.sign,
        },
    )


# ---------- orbit ----------


@click.command("orbit", help="Orbit polynomials of an upper unipotent flow.")
@click.argument("flow_file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--point",
    "-x",
    required=True,
    help='Starting point, comma separated rationals such as "0,1/2".',
)
@_output_format
def orbit(flow_file, point, output_format):
    flow = flow_from_json(load_document(flow_file))
    result = orbit_polynomials(flow.A, flow.a, _parse_point(point))
    results = {
        "parity_split": result.parity_split,
        "polys": [polynomial_to_json(_) for _ in result.polys],
    }
    if result.parity_split:
        results["odd_polys"] = [polynomial_to_json(_) for _ in result.odd_polys]
    _echo_results(output_format, results)


# ---------- classify ----------


@click.command("classify", help="Classify a flow on the 2-torus.")
@click.argument("flow_file", type=click.Path(exists=True, dir_okay=False))
@_output_format
def classify(flow_file, output_format):
    flow_class = classify_flow_2x2(flow_from_json(load_document(flow_file)))
    _echo_results(output_format, dict(flow_class._asdict()))


# ---------- mobius ----------


@click.command("mobius", help="Sieve the Mobius function up to N.")
@click.option("--n", "-n", "N", type=click.IntRange(min=1), required=True)
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, writable=True),
    help="Write mu(1..N) as N signed bytes.",
)
@_output_format
def mobius(N, out, output_format):
    mu = mobius_sieve(N)
    if out:
        with open(out, "wb") as f:
            f.write(mu[1:].tobytes())
    _echo_results(output_format, {"N": N, "mertens": int(mertens(mu)[N])})


# ---------- seq ----------


@click.group("seq", cls=DisjointMeterGroup, help="Oscillating sequences.")
def seq():
    pass


@seq.command("geometric", help="Values of e(alpha * beta**n * g(beta)).")
@click.option("--alpha", required=True, help='Real expression, e.g. "sqrt(2)".')
@click.option("--beta", required=True, help='Real expression > 1, e.g. "3/2".')
@click.option(
    "--g",
    "g",
    type=click.Choice(["const1", "identity", "log", "power"]),
    default="const1",
)
@click.option("--gamma", type=float, default=0.0)
@click.option("--precision_bits", type=click.IntRange(min=64), default=None)
@click.option("--n", "-n", "N", type=click.IntRange(min=1), required=True)
@click.option(
    "--moment",
    type=float,
    default=None,
    help="Echo the lambda-moment up to N instead of the values.",
)
def geometric(alpha, beta, g, gamma, precision_bits, N, moment):
    sequence = GeometricSequence(
        geometric_params(alpha, beta, g, gamma, precision_bits)
    )
    if moment is not None:
        stats = lambda_moment(sequence, moment, N)
        _echo_results("json", dict(stats._asdict()))
        return
    sequence.prepare(N)
    values = sequence.block(1, N + 1)
    click.echo("n,re,im")
    for n, value in enumerate(values, 1):
        click.echo("%d,%r,%r" % (n, float(value.real), float(value.imag)))


# ---------- experiments ----------


def _experiment_options(func):
    options = [
        click.option(
            "--config",
            "-c",
            "config_file",
            type=click.Path(exists=True, dir_okay=False),
            envvar="DISJOINTMETER_CONFIG",
            help="Experiment config (JSON or YAML).",
        ),
        click.option(
            "--example",
            "-e",
            help="Name of a shipped example config.",
        ),
        click.option(
            "--workers",
            "-w",
            type=click.IntRange(min=1),
            envvar="DISJOINTMETER_WORKERS",
            help="Worker threads; never changes the output.",
        ),
        click.option(
            "--output",
            "-o",
            type=click.Path(dir_okay=False, writable=True),
            help="CSV output file (stdout otherwise).",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run(experiment, config_file, example, workers, output, engine=None):
    config = _load_config(config_file, example, experiment)
    outcome = run_experiment(config, workers=workers, engine=engine)
    if output:
        outcome.write_csv(output)
        _echo_results("json", outcome.summary())
    else:
        buffer = io.StringIO()
        outcome.write_csv(buffer)
        click.echo(buffer.getvalue(), nl=False)


@click.command("weyl", help="Weighted Weyl sum of a polynomial phase.")
@_experiment_options
def weyl(config_file, example, workers, output):
    _run("weyl", config_file, example, workers, output)


@click.command("probe", help="Higher-order oscillation probe of a sequence.")
@_experiment_options
def probe(config_file, example, workers, output):
    _run("probe", config_file, example, workers, output)


@click.command("disjoint", help="Disjointness series of a flow and an observable.")
@_experiment_options
@click.option(
    "--engine",
    type=click.Choice(["exact", "float"]),
    envvar="DISJOINTMETER_ENGINE",
    help="Overrides the engine of the config.",
)
def disjoint(config_file, example, workers, output, engine):
    _run("disjoint", config_file, example, workers, output, engine)


# ---------- selftest ----------


@click.command("selftest", help="Run the invariant checks on built-in instances.")
@click.option("--seed", type=int, default=0, envvar="DISJOINTMETER_SEED")
def selftest(seed):
    results = run_selftest(seed)
    for _ in results:
        if _.passed:
            click.echo("PASS %s" % _.name)
        else:
            click.echo("FAIL %s: %s" % (_.name, _.detail))
    failed = [_.name for _ in results if not _.passed]
    if failed:
        raise ComputationError("selftest failed: %s" % ", ".join(failed))


main.add_command(info)
main.add_command(triangularize)
main.add_command(orbit)
main.add_command(classify)
main.add_command(mobius)
main.add_command(seq)
main.add_command(weyl)
main.add_command(probe)
main.add_command(disjoint)
main.add_command(selftest)


def run(argv=None):
    """
    Run the command line and return its exit code.

    0 on success, 1 on validation errors, 2 on computation errors.
    """
    try:
        result = main.main(
            args=argv, prog_name="disjointmeter", standalone_mode=False
        )
    except click.UsageError as e:
        click.echo("E_VALIDATION: %s" % e.format_message(), err=True)
        return EXIT_VALIDATION
    except click.ClickException as e:
        e.show()
        return EXIT_VALIDATION
    except click.Abort:
        return EXIT_VALIDATION
    return result if isinstance(result, int) else 0


def console_main():
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    console_main()
