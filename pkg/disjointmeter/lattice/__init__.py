# -*- coding: utf-8 -*-

"""Sub-level package for exact integer lattice arithmetic."""

from .types import *  # noqa
from .lattice import *  # noqa
