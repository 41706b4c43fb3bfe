# -*- coding: utf-8 -*-
"""
Package settings and experiment configs.

Loads from disjointmeter/settings.
"""

from importlib import resources
import logging

import yaml

from disjointmeter.codec import load_document
from disjointmeter.exceptions import ValidationError
from disjointmeter.validate import validate_defaults, validate_experiment

logger = logging.getLogger(__name__)

__all__ = ["DEFAULTS", "example_names", "example_path", "load_experiment"]


def _settings():
    return resources.files("disjointmeter").joinpath("settings")


def _load_yaml_resource(name):
    return yaml.safe_load(_settings().joinpath(name).read_text(encoding="utf-8"))


DEFAULTS = validate_defaults(_load_yaml_resource("defaults.yml"))


def example_names():
    """list of str: Names of the example configs shipped in settings/examples."""
    return sorted(
        _.name[: -len(".json")]
        for _ in _settings().joinpath("examples").iterdir()
        if _.name.endswith(".json")
    )


def example_path(name):
    """
    Path of a shipped example config.

    Raises
    ------
    ValidationError
        No example of that name.
    """
    if name not in example_names():
        raise ValidationError(
            "unknown example %r (known: %s)" % (name, ", ".join(example_names()))
        )
    return str(_settings().joinpath("examples").joinpath(name + ".json"))


def load_experiment(filename):
    """
    Read and validate an experiment config (JSON or YAML).

    Missing ``checkpoints`` and ``workers`` are taken from the package
    defaults.

    Returns
    -------
    dict
    """
    document = validate_experiment(load_document(filename))
    document.setdefault("checkpoints", list(DEFAULTS["checkpoints"]))
    document.setdefault("workers", DEFAULTS["workers"])
    logger.info("loaded %s experiment from %s", document["experiment"], filename)
    return document
