# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Power-sum polynomials

    S_p(n) = 0^p + 1^p + ... + (n-1)^p      (MINUS convention)
    T_p(n) = 1^p + 2^p + ... + n^p          (PLUS convention)

built by three independent procedures (closed form, Pascal's triangular
system, and Prouhet's integrate-and-fit chain) plus the integral of the
Bernoulli polynomial, and checked against literal summation.
"""


# Use flake8 http://flake8.pycqa.org/en/latest/user/error-codes.html

import enum
from dataclasses import dataclass, field

from . import core
from . import umbral
from . import generators
from .core import ExactRational, RationalPolynomial
from .generators import Convention

__all__ = [
    'BuildMethod',
    'PowerSumPolynomial',
    'ParityReport',
    'build',
    'build_closed_form',
    'build_pascal',
    'build_prouhet',
    'build_integral_form',
    'prouhet_bernoulli',
    'bernoulli_polynomial',
    'evaluate',
    'brute_force_sum',
    'parity_decompose',
]


class BuildMethod(enum.Enum):
    CLOSED_FORM = 'closed-form'
    PASCAL = 'pascal'
    PROUHET = 'prouhet'


@dataclass(frozen=True)
class PowerSumPolynomial:
    """
    S_p(n) (MINUS) or T_p(n) (PLUS) as a dense coefficient vector; index j
    holds the coefficient of n^j.  The degree is exactly p + 1 with leading
    coefficient 1/(p+1), and the constant term is zero.
    """

    power: int
    convention: Convention
    coefficients: tuple
    method: str = field(default='', compare=False)

    def __post_init__(self):
        poly = RationalPolynomial(self.coefficients)
        object.__setattr__(self, 'coefficients', poly.coefficients)
        if poly.degree != self.power + 1:
            raise ValueError("S_{} has degree {}, expected {}".format(
                self.power, poly.degree, self.power + 1))
        if poly.coefficients[-1] != ExactRational(1, self.power + 1):
            raise ValueError("S_{} has leading coefficient {}".format(
                self.power, poly.coefficients[-1]))
        if poly.coefficients[0] != 0:
            raise ValueError("S_{} has nonzero constant term {}".format(
                self.power, poly.coefficients[0]))

    @classmethod
    def from_polynomial(cls, power, conv, poly, method=''):
        return cls(power, conv, poly.coefficients, method)

    @property
    def polynomial(self):
        return RationalPolynomial(self.coefficients)

    def to_text(self):
        return self.polynomial.to_text('n')

    def to_json(self):
        return {
            'power': self.power,
            'convention': self.convention.value,
            'coefficients': [core.format_rational(c)
                             for c in self.coefficients],
        }


@dataclass(frozen=True)
class ParityReport:
    """
    S_p(n) + n^p/2 (or T_p(n) - n^p/2) and the exponents whose parity
    differs from that of p + 1.
    """

    power: int
    convention: Convention
    coefficients: tuple
    wrong_parity: tuple

    @property
    def parity(self):
        return (self.power + 1) % 2

    @property
    def holds(self):
        return not self.wrong_parity


def build_closed_form(p, conv=Convention.MINUS):
    """
    S_p(n) = [(B + n)^(p+1) - B_(p+1)]/(p+1), downgraded against the
    convention's Bernoulli prefix.
    """
    p = core.check_natural(p, 'p')
    seq = generators.bernoulli_sequence(p + 1, conv)
    full = umbral.bivariate_downgrade_polynomial(p + 1, seq.as_indexed())
    poly = (full - seq[p + 1]).scale(ExactRational(1, p + 1))
    return PowerSumPolynomial.from_polynomial(
        p, conv, poly, BuildMethod.CLOSED_FORM.value)


def _pascal_minus(p):
    # sum_{k<=q} C(q+1, k) S_k(n) = n^(q+1), solved for S_q.
    sums = []
    for q in range(p + 1):
        acc = RationalPolynomial.monomial(q + 1)
        for k in range(q):
            acc = acc - sums[k].scale(core.binomial(q + 1, k))
        sums.append(acc.scale(ExactRational(1, q + 1)))
    return sums


def _pascal_plus(p):
    # binom(T - 1, q) = binom(n, q+1): expand binom(x - 1, q) in powers of
    # x, substitute x^k -> T_k(n), and solve for T_q.
    sums = []
    for q in range(p + 1):
        coeffs = umbral.falling_binomial(-1, q).coefficients
        target = RationalPolynomial(
            umbral.falling_binomial(0, q + 1).coefficients)
        for k in range(q):
            target = target - sums[k].scale(coeffs[k])
        sums.append(target.scale(1 / coeffs[q]))
    return sums


def build_pascal(p, conv=Convention.MINUS):
    """Forward substitution in Pascal's triangular system."""
    p = core.check_natural(p, 'p')
    if conv is Convention.MINUS:
        sums = _pascal_minus(p)
    else:
        sums = _pascal_plus(p)
    return PowerSumPolynomial.from_polynomial(
        p, conv, sums[p], BuildMethod.PASCAL.value)


def _prouhet_chain(p, conv):
    """
    Integrate q * S_(q-1) and add the linear term B_q n fixed by S_q(1) = 0
    (MINUS) or T_q(1) = 1 (PLUS).
    """
    current = RationalPolynomial([0, 1])
    fitted = [ExactRational(1)]
    target = 0 if conv is Convention.MINUS else 1
    for q in range(1, p + 1):
        base = current.scale(q).antiderivative()
        linear = target - base.evaluate(1)
        current = base + RationalPolynomial([0, linear])
        fitted.append(linear)
    return current, fitted


def build_prouhet(p, conv=Convention.MINUS):
    p = core.check_natural(p, 'p')
    poly, _ = _prouhet_chain(p, conv)
    return PowerSumPolynomial.from_polynomial(
        p, conv, poly, BuildMethod.PROUHET.value)


def prouhet_bernoulli(p, conv=Convention.MINUS):
    """The Bernoulli numbers B_0..B_p fitted along the Prouhet chain."""
    p = core.check_natural(p, 'p')
    _, fitted = _prouhet_chain(p, conv)
    return generators.BernoulliSequence(conv, fitted, 'prouhet')


def bernoulli_polynomial(p, conv=Convention.MINUS):
    """(B + x)^p downgraded, as a polynomial in x."""
    p = core.check_natural(p, 'p')
    seq = generators.bernoulli_sequence(p, conv)
    return umbral.bivariate_downgrade_polynomial(p, seq.as_indexed())


def build_integral_form(p):
    """S_p(n) as the integral of (B + x)^p from 0 to n."""
    p = core.check_natural(p, 'p')
    poly = bernoulli_polynomial(p, Convention.MINUS).antiderivative()
    return PowerSumPolynomial.from_polynomial(
        p, Convention.MINUS, poly, 'integral')


_BUILDERS = {
    BuildMethod.CLOSED_FORM: build_closed_form,
    BuildMethod.PASCAL: build_pascal,
    BuildMethod.PROUHET: build_prouhet,
}


def build(p, conv=Convention.MINUS, method=BuildMethod.CLOSED_FORM):
    return _BUILDERS[BuildMethod(method)](p, conv)


def evaluate(poly, n):
    """
    Exact value at any integer (negative points included) or rational n.
    """
    return poly.polynomial.evaluate(n)


def brute_force_sum(p, n, conv=Convention.MINUS):
    """The defining sum, term by term, with 0^0 = 1."""
    p = core.check_natural(p, 'p')
    n = core.check_natural(n, 'n')
    if conv is Convention.MINUS:
        terms = range(0, n)
    else:
        terms = range(1, n + 1)
    return ExactRational(sum(core.zero_power(k, p) for k in terms))


def parity_decompose(poly):
    """
    Shift S_p(n) by +n^p/2 (MINUS) or T_p(n) by -n^p/2 (PLUS) and report
    every nonzero coefficient whose exponent has the parity of p.
    """
    if poly.power == 0:
        raise ValueError("parity decomposition requires p > 0")
    half = ExactRational(1, 2)
    if poly.convention is Convention.PLUS:
        half = -half
    shifted = poly.polynomial + RationalPolynomial.monomial(poly.power, half)
    parity = (poly.power + 1) % 2
    wrong = tuple(j for j, c in enumerate(shifted.coefficients)
                  if c != 0 and j % 2 != parity)
    return ParityReport(poly.power, poly.convention, shifted.coefficients,
                        wrong)

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
