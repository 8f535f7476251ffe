# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


import os
import json
import math
import unittest
from fractions import Fraction

import jsonschema

from bernlab import analytic
from bernlab import testing
from bernlab.analytic import (
    PlanaVariant, GlaisherVariant, CotVariant, QuadratureSpec, Scheme)


class QuadratureTC(testing.TestBase, unittest.TestCase):

    def test_spec_invariants(self):
        with self.assertRaises(ValueError):
            QuadratureSpec(0.0)
        with self.assertRaises(ValueError):
            QuadratureSpec(1.0, panel_count=4)
        self.assertEqual(QuadratureSpec(1.0).doubled().panel_count, 128)

    def test_envelope(self):
        spec = QuadratureSpec.for_envelope(3, 2 * math.pi)
        t = spec.upper_cutoff
        self.assertLess(t ** 3 * math.exp(-2 * math.pi * t), 1.0e-30)
        self.assertGreater(t, 3 / (2 * math.pi))
        with self.assertRaises(ValueError):
            QuadratureSpec.for_envelope(1, 0.0)

    def test_polynomial_exact(self):
        spec = QuadratureSpec(2.0, panel_count=8)
        self.assert_allclose(
            analytic.integrate(lambda t: t ** 5, spec), 2.0 ** 6 / 6)
        spec = QuadratureSpec(2.0, panel_count=8, scheme=Scheme.SIMPSON)
        self.assert_allclose(
            analytic.integrate(lambda t: t ** 3, spec), 4.0)

    def test_symmetric_interval(self):
        spec = QuadratureSpec(1.0, panel_count=8)
        self.assert_allclose(
            analytic.integrate(lambda t: t ** 2, spec, lower=-1.0), 2 / 3)


class ZetaTC(unittest.TestCase):

    def test_zeta_two(self):
        report = analytic.check_zeta_even(1)
        self.assertTrue(report.passed)
        self.assertEqual(report.exact_value, Fraction(1, 6))
        self.assertAlmostEqual(report.reference, math.pi ** 2 / 6,
                               places=14)

    def test_zeta_four(self):
        report = analytic.check_zeta_even(2)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.reference, math.pi ** 4 / 90,
                               places=13)

    def test_zeta_twelve(self):
        report = analytic.check_zeta_even(6, terms=100000)
        self.assertLess(report.rel_error, 1.0e-9)

    def test_large_index(self):
        report = analytic.check_zeta_even(200, terms=20)
        self.assertTrue(math.isfinite(report.reference))
        self.assertAlmostEqual(report.reference, 1.0, places=14)
        self.assertTrue(report.passed)

    def test_bounds(self):
        with self.assertRaises(ValueError):
            analytic.check_zeta_even(0)
        with self.assertRaises(ValueError):
            analytic.check_zeta_even(1, terms=5)


class PlanaTC(unittest.TestCase):

    def test_first(self):
        report = analytic.check_plana(1)
        self.assertTrue(report.passed)
        self.assertTrue(report.converged)
        self.assertAlmostEqual(report.numeric_value, 1 / 6, places=10)

    def test_expp1(self):
        report = analytic.check_plana(1, PlanaVariant.POWER_OVER_EXPP1)
        self.assertTrue(report.passed)
        self.assertEqual(report.exact_value, Fraction(1, 12))

    def test_sinh_squared(self):
        report = analytic.check_plana(4, PlanaVariant.SINH_SQUARED)
        self.assertTrue(report.passed)
        self.assertEqual(report.exact_value, Fraction(1, 30))
        self.assertLess(report.rel_error, 1.0e-8)

    def test_grid(self):
        for variant in PlanaVariant:
            for n in range(1, 9):
                report = analytic.check_plana(n, variant)
                self.assertTrue(report.passed, report)
                self.assertTrue(report.exact_value > 0)

    def test_pairs_agree(self):
        for n in range(1, 9):
            for first, second in (
                    (PlanaVariant.POWER_OVER_EXPM1,
                     PlanaVariant.SINH_SQUARED),
                    (PlanaVariant.POWER_OVER_EXPP1,
                     PlanaVariant.COSH_SQUARED)):
                a = analytic.check_plana(n, first).numeric_value
                b = analytic.check_plana(n, second).numeric_value
                self.assertLess(abs(a - b), 1.0e-10 * abs(a))

    def test_high_power_integrand(self):
        report = analytic.check_plana(100)
        self.assertTrue(math.isfinite(report.numeric_value))
        self.assertTrue(report.passed, report)

    def test_beyond_float_range(self):
        with self.assertRaisesRegex(ValueError, "float64"):
            analytic.check_plana(140)

    def test_coarse_panels_not_converged(self):
        spec = QuadratureSpec(40.0, panel_count=8, order=2)
        report = analytic.check_plana(3, spec=spec)
        self.assertFalse(report.converged)
        self.assertFalse(report.passed)


class GlaisherTC(unittest.TestCase):

    def test_first_with_correction(self):
        report = analytic.check_glaisher(0)
        self.assertTrue(report.passed)
        self.assertEqual(report.exact_value, Fraction(1, 6))
        self.assertEqual(report.note, '')

    def test_typeset_correction_residual(self):
        report = analytic.check_glaisher(0, typeset_correction=True)
        self.assertFalse(report.passed)
        self.assertIn("residual", report.note)
        self.assertAlmostEqual(report.abs_error, 1 / (4 * math.pi),
                               places=10)

    def test_higher_without_correction(self):
        report = analytic.check_glaisher(1)
        self.assertTrue(report.passed)
        self.assertEqual(report.exact_value, Fraction(1, 42))
        self.assertTrue(analytic.check_glaisher(2).passed)

    def test_odd_variant(self):
        report = analytic.check_glaisher(1, GlaisherVariant.ODD_EXP_PLUS)
        self.assertTrue(report.passed)
        self.assertEqual(report.exact_value, Fraction(31, 42))
        for n in (0, 2):
            self.assertTrue(analytic.check_glaisher(
                n, GlaisherVariant.ODD_EXP_PLUS).passed)

    def test_high_power_terms(self):
        report = analytic.check_glaisher(40)
        self.assertTrue(math.isfinite(report.numeric_value))
        self.assertTrue(report.passed, report)

    def test_beyond_float_range(self):
        with self.assertRaisesRegex(ValueError, "float64"):
            analytic.check_glaisher(70)


class JensenTC(unittest.TestCase):

    def test_values(self):
        expected = {0: Fraction(1), 1: Fraction(1, 2), 4: Fraction(-1, 30)}
        for n, value in expected.items():
            report = analytic.check_jensen(n)
            self.assertTrue(report.passed, report)
            self.assertEqual(report.exact_value, value)

    def test_grid(self):
        for n in range(9):
            self.assertTrue(analytic.check_jensen(n).passed, n)

    def test_beyond_float_range(self):
        with self.assertRaisesRegex(ValueError, "float64"):
            analytic.check_jensen(300)

    def test_odd_zero_absolute(self):
        report = analytic.check_jensen(5)
        self.assertIsNone(report.rel_error)
        self.assertEqual(report.error, report.abs_error)


class CotTC(unittest.TestCase):

    def test_sin(self):
        report = analytic.check_cot_egf(0.7, variant=CotVariant.SIN_2BX)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.numeric_value, -0.7, places=15)

    def test_cos(self):
        report = analytic.check_cot_egf(1.0, terms=20)
        self.assertTrue(report.passed)
        self.assertLess(report.abs_error, 1.0e-12)
        self.assertAlmostEqual(report.reference, 1 / math.tan(1.0),
                               places=15)

    def test_half(self):
        report = analytic.check_cot_egf(1.0, terms=20,
                                        variant=CotVariant.COS_BX_HALF)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.reference, 0.5 / math.tan(0.5),
                               places=15)

    def test_grid(self):
        for variant in CotVariant:
            for x in (0.5, 1.0, 2.0):
                self.assertTrue(
                    analytic.check_cot_egf(x, variant=variant).passed)

    def test_domain(self):
        with self.assertRaises(ValueError):
            analytic.check_cot_egf(5.0)
        with self.assertRaises(ValueError):
            analytic.check_cot_egf(0.0)
        analytic.check_cot_egf(5.0, variant=CotVariant.COS_BX_HALF)
        with self.assertRaises(ValueError):
            analytic.check_cot_egf(7.0, variant=CotVariant.COS_BX_HALF)


class AbelTC(unittest.TestCase):

    def test_points(self):
        for x in (0.001, 1.0, 4.0):
            report = analytic.check_abel_integral(x)
            self.assertTrue(report.passed, report)
            self.assertLess(report.rel_error, 1.0e-8)

    def test_near_zero(self):
        report = analytic.check_abel_integral(1.0e-3)
        self.assertAlmostEqual(report.numeric_value, 1.0, places=6)

    def test_domain(self):
        with self.assertRaises(ValueError):
            analytic.check_abel_integral(7.0)
        with self.assertRaises(ValueError):
            analytic.check_abel_integral(0.0)


class StirlingTC(unittest.TestCase):

    def test_ten(self):
        report = analytic.stirling_log_factorial(10, 3)
        self.assertTrue(report.passed)
        bound = (1 / 30) / (56 * 10 ** 7)
        self.assertLess(report.abs_error, bound)

    def test_hundred(self):
        report = analytic.stirling_log_factorial(100, 2)
        self.assertTrue(report.passed)
        self.assertLess(report.rel_error, 1.0e-12)

    def test_divergence(self):
        errors, best = analytic.stirling_divergence_sweep(2, 12)
        self.assertEqual(len(errors), 13)
        self.assertGreater(best, 0)
        self.assertLess(best, 12)
        self.assertGreater(errors[12], errors[best])
        self.assertGreater(errors[0], errors[best])

    def test_many_terms_large_n(self):
        report = analytic.stirling_log_factorial(10 ** 5, 80)
        self.assertTrue(math.isfinite(report.numeric_value))
        self.assertTrue(report.passed, report)

    def test_terms_beyond_float_range(self):
        with self.assertRaisesRegex(ValueError, "Stirling term"):
            analytic.stirling_log_factorial(2, 170)

    def test_bounds(self):
        with self.assertRaises(ValueError):
            analytic.stirling_log_factorial(1, 2)


class ReportTC(unittest.TestCase):

    def test_passed_matches_error(self):
        for report in analytic.run_default_grid():
            self.assertEqual(report.passed,
                             report.error <= report.tolerance
                             and report.converged, report.identity)
            self.assertTrue(report.passed, report)

    def test_grid_sorted(self):
        reports = analytic.run_default_grid()
        names = [r.identity for r in reports]
        self.assertEqual(names, sorted(names))

    def test_json_schema(self):
        path = os.path.join(os.path.abspath(os.path.dirname(__file__)),
                            "data", "check_report_schema.json")
        with open(path, 'r') as schema_file:
            schema = json.load(schema_file)
        for report in (analytic.check_plana(2),
                       analytic.check_cot_egf(1.0),
                       analytic.check_jensen(3)):
            data = json.loads(json.dumps(report.to_json()))
            try:
                jsonschema.validate(instance=data, schema=schema)
            except jsonschema.ValidationError as e:
                self.fail(f"JSON data is invalid: {e.message}")

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
