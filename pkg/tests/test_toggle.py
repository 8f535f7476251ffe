# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


import unittest

from bernlab.toggle import OutputFormat, Toggle


class ToggleTC(unittest.TestCase):

    def test_defaults(self):
        tg = Toggle.from_environ({})
        self.assertEqual(tg.fmt, OutputFormat.PLAIN)
        self.assertIsNone(tg.tolerance)
        self.assertEqual(tg.report(), "Toggle: FORMAT=plain TOLERANCE=default")

    def test_environ(self):
        tg = Toggle.from_environ({'BERNLAB_FORMAT': 'JSON',
                                  'BERNLAB_TOL': '1e-6'})
        self.assertEqual(tg.fmt, OutputFormat.JSON)
        self.assertEqual(tg.tolerance, 1.0e-6)

    def test_empty_values(self):
        tg = Toggle.from_environ({'BERNLAB_FORMAT': '', 'BERNLAB_TOL': ' '})
        self.assertEqual(tg, Toggle())

    def test_bad_format(self):
        with self.assertRaisesRegex(ValueError, "BERNLAB_FORMAT"):
            Toggle.from_environ({'BERNLAB_FORMAT': 'xml'})

    def test_bad_tolerance(self):
        for text in ('0', '-1e-3', 'tight', 'nan'):
            with self.assertRaisesRegex(ValueError, "BERNLAB_TOL"):
                Toggle.from_environ({'BERNLAB_TOL': text})

    def test_direct(self):
        self.assertEqual(Toggle('csv').fmt, OutputFormat.CSV)
        with self.assertRaises(ValueError):
            Toggle(tolerance=0.0)

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
