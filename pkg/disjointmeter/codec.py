# -*- coding: utf-8 -*-
"""
Reading and writing of matrices, flows, points and real expressions.

Integers travel as decimal strings of any length, rationals as ``"p/q"``
strings. Real parameters that are not rational are written as small
expressions (``"sqrt(2)"``, ``"pi/4"``, ``"2*phi"``) so they can be
evaluated to any precision with mpmath.
"""

from fractions import Fraction
import numbers
import re

import mpmath
import yaml

from disjointmeter.dynamics import AffineTorusFlow, RationalPolynomial, TorusPoint
from disjointmeter.exceptions import ValidationError
from disjointmeter.lattice import IntMatrix
from disjointmeter.validate import validate_flow, validate_matrix

__all__ = [
    "flow_from_json",
    "flow_to_json",
    "format_rational",
    "load_document",
    "matrix_from_json",
    "matrix_to_json",
    "parse_coordinate",
    "parse_rational",
    "parse_real",
    "point_from_json",
    "point_to_json",
    "polynomial_from_json",
    "polynomial_to_json",
    "real_value",
]


# ---------- rationals ----------


def format_rational(value):
    """str: ``"p"`` for integers, ``"p/q"`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(value):
    """
    Fraction from an int, a Fraction or a string such as ``"-3/4"`` or
    ``"0.25"``.

    Raises
    ------
    ValidationError
    """
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ValidationError("not a rational number: %r" % (value,))


def parse_coordinate(value):
    """Fraction when value is rational, float otherwise."""
    if isinstance(value, float):
        return value
    try:
        return parse_rational(value)
    except ValidationError:
        return real_value(value)


# ---------- real expressions ----------


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?(?:[eE][-+]?\d+)?)|([a-z]+)|(.))")


def _tokenize(text):
    tokens = []
    for number, name, symbol in _TOKEN.findall(text.strip()):
        if number:
            tokens.append(("num", number))
        elif name:
            tokens.append(("name", name))
        else:
            tokens.append(("sym", symbol))
    return tokens


class _RealParser:
    """
    Recursive descent over ``expr := term (('+'|'-') term)*``,
    ``term := factor (('*'|'/') factor)*``,
    ``factor := ['-'] (number | const | 'sqrt(' expr ')' | '(' expr ')')``.
    """

    _CONSTANTS = {
        "pi": lambda ctx: ctx.pi,
        "e": lambda ctx: ctx.e,
        "phi": lambda ctx: ctx.phi,
    }

    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def fail(self):
        raise ValidationError("cannot parse real expression %r" % self.text)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        token = self.peek()
        if token[0] is None or (kind and token[0] != kind):
            self.fail()
        if value is not None and token[1] != value:
            self.fail()
        self.i += 1
        return token

    def parse(self):
        value = self.expr()
        if self.i != len(self.tokens):
            self.fail()
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            _, op = self.take()
            value = value + self.term() if op == "+" else value - self.term()
        return value

    def term(self):
        value = self.factor()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            _, op = self.take()
            value = value * self.factor() if op == "*" else value / self.factor()
        return value

    def factor(self):
        kind, token = self.peek()
        if (kind, token) == ("sym", "-"):
            self.take()
            return -self.factor()
        if kind == "num":
            self.take()
            return self.ctx.mpf(token)
        if (kind, token) == ("sym", "("):
            self.take()
            value = self.expr()
            self.take("sym", ")")
            return value
        if kind == "name" and token in self._CONSTANTS:
            self.take()
            return self._CONSTANTS[token](self.ctx)
        if (kind, token) == ("name", "sqrt"):
            self.take()
            self.take("sym", "(")
            value = self.expr()
            self.take("sym", ")")
            if value < 0:
                self.fail()
            return self.ctx.sqrt(value)
        self.fail()


def parse_real(value, ctx=None):
    """
    Evaluate a real expression at the precision of an mpmath context.

    Parameters
    ----------
    value: str or number
        ``"3/2"``, ``"sqrt(2)"``, ``"pi/4"``, ``"1+sqrt(5)"``, ...
    ctx: mpmath context, optional
        Defaults to the global ``mpmath.mp``.

    Returns
    -------
    mpf

    Raises
    ------
    ValidationError
    """
    ctx = ctx or mpmath.mp
    if isinstance(value, numbers.Rational):
        value = Fraction(value)
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, float):
        return ctx.mpf(value)
    if not isinstance(value, str):
        raise ValidationError("not a real expression: %r" % (value,))
    return _RealParser(value, ctx).parse()


def real_value(value):
    """float: Real expression in double precision."""
    return float(parse_real(value))


# ---------- documents ----------


def load_document(filename):
    """
    Load a JSON or YAML document.

    Raises
    ------
    ValidationError
        The file is not valid JSON or YAML.
    """
    with open(filename, "r", encoding="utf-8") as f:
        try:
            return yaml.safe_load(f.read())
        except yaml.YAMLError as e:
            raise ValidationError("cannot read %s: %s" % (filename, e))


def matrix_from_json(document):
    """IntMatrix from ``{"rows", "cols", "entries"}``."""
    validate_matrix(document)
    return IntMatrix.from_rows(
        [[int(str(_).strip()) for _ in row] for row in document["entries"]]
    )


def matrix_to_json(m):
    """dict: Matrix document with decimal-string entries."""
    if not isinstance(m, IntMatrix):
        m = m.matrix
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[str(_) for _ in row] for row in m.entries],
    }


def point_from_json(values):
    """TorusPoint from a list of rationals or real expressions."""
    return TorusPoint.of(parse_coordinate(_) for _ in values)


def point_to_json(x):
    return [
        format_rational(_) if isinstance(_, Fraction) else repr(_) for _ in x.coords
    ]


def flow_from_json(document):
    """
    AffineTorusFlow from ``{"A": matrix, "a": [...], "dim": d}``.

    Raises
    ------
    ValidationError, NotUnimodular
    """
    validate_flow(document)
    return AffineTorusFlow.create(
        matrix_from_json(document["A"]), point_from_json(document["a"])
    )


def flow_to_json(flow):
    return {
        "A": matrix_to_json(flow.A),
        "a": point_to_json(flow.a),
        "dim": flow.dimension,
    }


def polynomial_to_json(p):
    """list of str: Coefficients in ascending degree."""
    return [format_rational(_) for _ in p.coefficients]


def polynomial_from_json(values):
    return RationalPolynomial(parse_rational(_) for _ in values)
