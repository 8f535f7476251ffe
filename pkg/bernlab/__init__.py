# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
bernlab: exact Bernoulli numbers, sums of powers, and their cross-checks
"""


# Use flake8 http://flake8.pycqa.org/en/latest/user/error-codes.html


from . import core  # noqa: F401
from .core import ExactRational, RationalPolynomial  # noqa: F401
from . import umbral  # noqa: F401
from . import generators  # noqa: F401
from .generators import Convention, BernoulliSequence  # noqa: F401
from . import powersum  # noqa: F401
from . import analytic  # noqa: F401
from . import toggle  # noqa: F401
from . import testing  # noqa: F401


# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
