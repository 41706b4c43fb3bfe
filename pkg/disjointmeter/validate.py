# -*- coding: utf-8 -*-
"""Methods to check documents passed to disjointmeter."""

from cerberus import Validator
import yaml

from disjointmeter.exceptions import ValidationError


def _check(document, schema, what, normalize=False):
    validator = Validator(schema)
    if not validator.validate(document):
        raise ValidationError("Errors in %s:\n%s" % (what, validator.errors))
    return validator.document if normalize else document


# ---------- settings ----------


DEFAULTS_SCHEMA = yaml.safe_load(
    """
    block_size:
        type: integer
        min: 256
        required: true
    kahan_lanes:
        type: integer
        min: 1
        required: true
    checkpoints:
        type: list
        minlength: 1
        schema:
            type: integer
            min: 1
        required: true
    t_grid_size:
        type: integer
        min: 1
        required: true
    strong_samples:
        type: integer
        min: 1
        required: true
    real_phase_cap:
        type: integer
        min: 1
        required: true
    guard_bits:
        type: integer
        min: 64
        required: true
    workers:
        type: integer
        min: 1
        required: true
    max_phase_degree:
        type: integer
        min: 0
        required: true
    """
)


def validate_defaults(defaults):
    """Validate package defaults loaded from ``settings/defaults.yml``."""
    return _check(defaults, DEFAULTS_SCHEMA, "defaults")


# ---------- matrices and flows ----------


_INTEGER = """
                type: [string, integer]
                regex: '^\\s*[-+]?\\d+\\s*$'
"""

MATRIX_SCHEMA_STR = (
    """
    rows:
        type: integer
        min: 1
        required: true
    cols:
        type: integer
        min: 1
        required: true
    entries:
        type: list
        minlength: 1
        required: true
        schema:
            type: list
            minlength: 1
            schema:"""
    + _INTEGER
)

MATRIX_SCHEMA = yaml.safe_load(MATRIX_SCHEMA_STR)

_NUMBER_LIST = {
    "type": "list",
    "minlength": 1,
    "schema": {"type": ["string", "integer", "float"]},
}

FLOW_SCHEMA = {
    "A": {"type": "dict", "required": True, "schema": MATRIX_SCHEMA},
    "a": dict(_NUMBER_LIST, required=True),
    "dim": {"type": "integer", "min": 1, "required": True},
}


def validate_matrix(document):
    """
    Validate a matrix document ``{"rows", "cols", "entries"}``.

    Entries are integers or decimal strings of any length.

    Raises
    ------
    ValidationError
    """
    _check(document, MATRIX_SCHEMA, "matrix")
    entries = document["entries"]
    if len(entries) != document["rows"] or any(
        len(row) != document["cols"] for row in entries
    ):
        raise ValidationError(
            "Errors in matrix:\nentries do not match %sx%s"
            % (document["rows"], document["cols"])
        )
    return document


def validate_flow(document):
    """Validate a flow document ``{"A", "a", "dim"}``."""
    _check(document, FLOW_SCHEMA, "flow")
    validate_matrix(document["A"])
    if not (document["A"]["rows"] == document["dim"] == len(document["a"])):
        raise ValidationError("Errors in flow:\ndimensions of A, a and dim differ")
    return document


# ---------- experiments ----------


EXPERIMENT_SCHEMA = yaml.safe_load(
    """
    experiment:
        type: string
        allowed: [disjoint, weyl, probe]
        required: true
    name:
        type: string
    seed:
        type: integer
        default: 0
    workers:
        type: integer
        min: 1
    checkpoints:
        type: list
        minlength: 1
        schema:
            type: integer
            min: 1
    weights:
        type: dict
        required: true
        schema:
            kind:
                type: string
                allowed: [mobius, geometric, constant, character]
                required: true
            alpha:
                type: [string, integer, float]
            beta:
                type: [string, integer, float]
            g:
                type: string
                allowed: [const1, identity, log, power]
                default: const1
            gamma:
                type: number
                min: 0
                default: 0
            precision_bits:
                type: integer
                min: 64
                nullable: true
                default: null
            value:
                type: [string, integer, float]
            theta:
                type: [string, integer, float]
    phase:
        type: dict
        schema:
            kind:
                type: string
                allowed: [rational, real]
                default: rational
            coefficients:
                type: list
                minlength: 1
                required: true
                schema:
                    type: [string, integer, float]
    probe:
        type: dict
        schema:
            order:
                type: integer
                min: 1
                required: true
            mode:
                type: string
                allowed: [weak, strong]
                default: weak
            t_grid:
                type: list
                minlength: 1
                schema:
                    type: [string, integer, float]
            samples:
                type: integer
                min: 1
    flow:
        type: dict
    point:
        type: list
        minlength: 1
        schema:
            type: [string, integer, float]
    observable:
        type: dict
        schema:
            box:
                type: list
                minlength: 1
                schema:
                    type: list
                    items:
                        - type: integer
                        - type: integer
            seed:
                type: integer
            terms:
                type: list
                minlength: 1
                schema:
                    type: dict
                    schema:
                        k:
                            type: list
                            required: true
                            schema:
                                type: integer
                        re:
                            type: number
                            default: 0.0
                        im:
                            type: number
                            default: 0.0
    engine:
        type: string
        allowed: [exact, float]
        default: exact
    """
)

_REQUIRED_SECTIONS = {
    "disjoint": ("flow", "point", "observable"),
    "weyl": ("phase",),
    "probe": ("probe",),
}

_REQUIRED_WEIGHT_FIELDS = {
    "geometric": ("alpha", "beta"),
    "constant": ("value",),
    "character": ("theta",),
    "mobius": (),
}


def validate_experiment(document):
    """
    Validate an experiment config and fill in defaults.

    Unknown fields are rejected. Sections required by the experiment kind
    (``flow``, ``point`` and ``observable`` for ``disjoint``; ``phase`` for
    ``weyl``; ``probe`` for ``probe``) must be present.

    Returns
    -------
    dict
        Normalized document

    Raises
    ------
    ValidationError
    """
    if not isinstance(document, dict):
        raise ValidationError("Errors in experiment config:\nnot a mapping")
    document = _check(document, EXPERIMENT_SCHEMA, "experiment config", True)
    missing = [
        _ for _ in _REQUIRED_SECTIONS[document["experiment"]] if _ not in document
    ]
    weights = document["weights"]
    missing += [
        "weights.%s" % _
        for _ in _REQUIRED_WEIGHT_FIELDS[weights["kind"]]
        if _ not in weights
    ]
    if missing:
        raise ValidationError(
            "Errors in experiment config:\nmissing %s" % ", ".join(missing)
        )
    if "flow" in document:
        validate_flow(document["flow"])
    observable = document.get("observable")
    if observable is not None and ("box" in observable) == ("terms" in observable):
        raise ValidationError(
            "Errors in experiment config:\nobservable needs exactly one of box, terms"
        )
    return document
