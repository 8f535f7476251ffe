# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


import unittest
from fractions import Fraction

from bernlab import generators
from bernlab import verify
from bernlab.generators import Convention


class RunSuitesTC(unittest.TestCase):

    def tearDown(self):
        generators.clear_cache()

    def test_all_pass(self):
        results = verify.run_suites(20, workers=4)
        self.assertEqual([r.name for r in results], sorted(verify.SUITES))
        for result in results:
            self.assertTrue(result.passed, result)
            self.assertGreater(result.checked, 0)
            self.assertEqual(result.detail, '')

    def test_upto_zero(self):
        for result in verify.run_suites(0, workers=1):
            self.assertTrue(result.passed, result)

    def test_deterministic_order(self):
        names = ['umbral.identities', 'generators.convention']
        first = verify.run_suites(6, workers=2, names=names)
        second = verify.run_suites(6, workers=1, names=names)
        self.assertEqual(first, second)
        self.assertEqual([r.name for r in first], sorted(names))

    def test_fault_injection(self):
        generators.clear_cache()
        values = list(generators.bernoulli_prefix(30))
        values[4] = Fraction(-1, 31)
        generators.cache._store[Convention.MINUS] = tuple(values)
        result = verify.run_suite('generators.agreement', 10)
        self.assertFalse(result.passed)
        self.assertIn("index 4", result.detail)
        self.assertIn("-1/30", result.detail)
        self.assertIn("-1/31", result.detail)

    def test_fault_fails_run(self):
        generators.clear_cache()
        values = list(generators.bernoulli_prefix(30))
        values[6] = Fraction(1, 41)
        generators.cache._store[Convention.MINUS] = tuple(values)
        results = verify.run_suites(10, workers=2)
        self.assertFalse(all(r.passed for r in results))

    def test_bad_workers(self):
        with self.assertRaises(ValueError):
            verify.run_suites(3, workers=0)

    def test_result_json(self):
        result = verify.SuiteResult('x', False, 3, 'broken')
        self.assertEqual(result.to_json(), {'name': 'x', 'passed': False,
                                            'checked': 3,
                                            'detail': 'broken'})

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
