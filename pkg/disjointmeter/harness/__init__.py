# -*- coding: utf-8 -*-
"""Weight sequences, compensated summation and Weyl-sum experiments."""

from .types import *  # noqa
from .summation import *  # noqa
from .sequences import *  # noqa
from .trig import *  # noqa
from .weyl import *  # noqa
