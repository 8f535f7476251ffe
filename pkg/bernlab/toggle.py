# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Run-wide defaults taken from the environment.
"""


import os
import enum
from dataclasses import dataclass

__all__ = [
    'OutputFormat',
    'Toggle',
    'FORMAT_VARIABLE',
    'TOLERANCE_VARIABLE',
]


FORMAT_VARIABLE = 'BERNLAB_FORMAT'
TOLERANCE_VARIABLE = 'BERNLAB_TOL'


class OutputFormat(enum.Enum):
    PLAIN = 'plain'
    JSON = 'json'
    CSV = 'csv'


@dataclass(frozen=True)
class Toggle:
    """
    Output format and tolerance override.  A ``tolerance`` of None keeps the
    default of each check.
    """

    fmt: OutputFormat = OutputFormat.PLAIN
    tolerance: object = None

    def __post_init__(self):
        object.__setattr__(self, 'fmt', OutputFormat(self.fmt))
        if self.tolerance is not None and not self.tolerance > 0:
            raise ValueError("tolerance must be positive, got {}".format(
                self.tolerance))

    @classmethod
    def from_environ(cls, environ=None):
        if environ is None:
            environ = os.environ
        fmt = environ.get(FORMAT_VARIABLE, '') or OutputFormat.PLAIN.value
        try:
            fmt = OutputFormat(fmt.strip().lower())
        except ValueError:
            raise ValueError("{}={!r} is not one of {}".format(
                FORMAT_VARIABLE, fmt,
                ', '.join(f.value for f in OutputFormat))) from None
        tolerance = environ.get(TOLERANCE_VARIABLE, '').strip() or None
        if tolerance is not None:
            try:
                tolerance = float(tolerance)
            except ValueError:
                tolerance = float('nan')
            if not tolerance > 0:
                raise ValueError("{}={!r} is not a positive real".format(
                    TOLERANCE_VARIABLE, environ[TOLERANCE_VARIABLE]))
        return cls(fmt=fmt, tolerance=tolerance)

    def report(self):
        return "Toggle: FORMAT={} TOLERANCE={}".format(
            self.fmt.value, 'default' if self.tolerance is None
            else repr(self.tolerance))

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
