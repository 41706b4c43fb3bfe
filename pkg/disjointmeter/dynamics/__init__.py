# -*- coding: utf-8 -*-
"""Affine flows on the d-torus, their normal forms and orbit polynomials."""

from .types import *  # noqa
from .polynomial import *  # noqa
from .triangularize import *  # noqa
from .flow import *  # noqa
from .orbit import *  # noqa
