# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


import unittest
from fractions import Fraction

from hypothesis import given, strategies as st

from bernlab import core
from bernlab import umbral
from bernlab import generators
from bernlab.generators import Convention
from bernlab.umbral import UmbralPolynomial, IndexedSequence


small_fractions = st.fractions(min_value=-9, max_value=9,
                               max_denominator=9)


class UmbralPolynomialTC(unittest.TestCase):

    def test_shift_power(self):
        self.assertEqual(umbral.shift_power(1, 2),
                         UmbralPolynomial([1, 2, 1]))
        self.assertEqual(umbral.shift_power(-2, 3),
                         UmbralPolynomial([-8, 12, -6, 1]))
        self.assertEqual(umbral.shift_power(5, 0), UmbralPolynomial([1]))

    def test_to_text(self):
        self.assertEqual(umbral.shift_power(1, 2).to_text(),
                         "1 + 2*A + A^2")
        poly = UmbralPolynomial([Fraction(1, 2), 0, -3])
        self.assertEqual(poly.to_text('B'), "1/2 - 3*B^2")

    def test_falling_binomial(self):
        # binom(A, 2) = (A^2 - A)/2
        self.assertEqual(umbral.falling_binomial(0, 2),
                         UmbralPolynomial([0, Fraction(-1, 2),
                                           Fraction(1, 2)]))
        self.assertEqual(umbral.falling_binomial(3, 0),
                         UmbralPolynomial([1]))

    def test_product_type(self):
        prod = umbral.poly_multiply(umbral.shift_power(1, 1),
                                    umbral.shift_power(-1, 1))
        self.assertIsInstance(prod, UmbralPolynomial)
        self.assertEqual(prod, UmbralPolynomial([-1, 0, 1]))


class DowngradeTC(unittest.TestCase):

    def setUp(self):
        self.bern = generators.bernoulli_sequence(41).as_indexed()
        self.plus = generators.bernoulli_sequence(
            40, Convention.PLUS).as_indexed()

    def test_sequence_too_short(self):
        seq = IndexedSequence.from_values([1, 2])
        with self.assertRaisesRegex(ValueError, "cannot downgrade"):
            umbral.downgrade(umbral.shift_power(1, 2), seq)

    def test_empty_sequence(self):
        with self.assertRaises(ValueError):
            IndexedSequence(())

    def test_order_matters(self):
        # (A + 1)^2 downgraded is not the square of A + 1 downgraded.
        seq = self.bern
        lin = umbral.shift_power(1, 1)
        whole = umbral.downgrade(umbral.poly_multiply(lin, lin), seq)
        self.assertEqual(whole, Fraction(1, 6))
        self.assertEqual(umbral.downgrade(lin, seq) ** 2, Fraction(1, 4))

    def test_de_moivre_form(self):
        for p in range(41):
            value = (umbral.downgrade(umbral.shift_power(1, p + 1),
                                      self.bern) - self.bern[p + 1])
            self.assertEqual(value, core.zero_power(0, p))

    def test_reflected_form(self):
        for p in range(41):
            self.assertEqual(
                umbral.downgrade(umbral.shift_power(1, p), self.bern),
                (-1) ** p * self.bern[p])

    def test_blissard_binomials(self):
        for p in range(31):
            self.assertEqual(
                umbral.downgrade(umbral.falling_binomial(0, p), self.bern),
                Fraction((-1) ** p, p + 1))
        for p in range(1, 31):
            self.assertEqual(
                umbral.downgrade(umbral.falling_binomial(p - 1, p),
                                 self.bern),
                Fraction(-1, p * (p + 1)))

    def test_plus_binomial(self):
        for p in range(31):
            self.assertEqual(
                umbral.downgrade(umbral.falling_binomial(-1, p), self.plus),
                Fraction((-1) ** p, p + 1))

    def test_bivariate(self):
        poly = umbral.bivariate_downgrade_polynomial(2, self.bern)
        # n^2 + 2 B_1 n + B_2
        self.assertEqual(poly.coefficients,
                         (Fraction(1, 6), Fraction(-1), Fraction(1)))
        for m in range(1, 20):
            self.assertEqual(
                umbral.bivariate_downgrade_polynomial(m, self.bern)
                .derivative(),
                umbral.bivariate_downgrade_polynomial(m - 1, self.bern)
                .scale(m))

    def test_substitute_power_sums(self):
        n = core.RationalPolynomial.monomial(1)
        sums = [core.RationalPolynomial([1]), n, n * n]
        poly = core.RationalPolynomial([2, 0, 3])
        self.assertEqual(umbral.substitute_power_sums(poly, sums),
                         core.RationalPolynomial([2]) + (n * n).scale(3))
        self.assertEqual(
            umbral.substitute_power_sums(core.RationalPolynomial([0, 5]),
                                         sums[:2]),
            n.scale(5))
        with self.assertRaises(ValueError):
            umbral.substitute_power_sums(
                core.RationalPolynomial.monomial(3), sums)

    @given(st.lists(small_fractions, min_size=1, max_size=6),
           st.lists(small_fractions, min_size=1, max_size=6),
           small_fractions, small_fractions)
    def test_linear(self, p, q, a, b):
        p = UmbralPolynomial(p)
        q = UmbralPolynomial(q)
        seq = self.bern
        self.assertEqual(
            umbral.downgrade(p.scale(a) + q.scale(b), seq),
            a * umbral.downgrade(p, seq) + b * umbral.downgrade(q, seq))

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
