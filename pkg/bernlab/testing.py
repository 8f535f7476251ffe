# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING

import numpy as np

from . import core


class TestBase:

    def assert_allclose(self, *args, **kw):
        if 'rtol' not in kw:
            kw['rtol'] = 1.e-12
        return np.testing.assert_allclose(*args, **kw)

    def assert_fraction_list_equal(self, actual, expected):
        actual = [core.as_rational(v) for v in actual]
        expected = [core.parse_rational(v) if isinstance(v, str)
                    else core.as_rational(v) for v in expected]
        self.assertEqual(len(actual), len(expected))
        for index, (a, e) in enumerate(zip(actual, expected)):
            self.assertEqual(a, e, "mismatch at index {}: {} != {}".format(
                index, core.format_rational(a), core.format_rational(e)))

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
