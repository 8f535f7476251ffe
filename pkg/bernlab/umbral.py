# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Representative (umbral) calculus.

A polynomial in the umbral symbol A is expanded first and then "downgraded":
every power A^k is replaced by the k-th element a_k of a sequence.  The
symbol has no runtime identity of its own; an :py:class:`UmbralPolynomial` is
a coefficient vector and downgrading is a dot product.  Downgrading does not
commute with multiplication, so products must be formed before
:py:func:`downgrade` is called.
"""


# Use flake8 http://flake8.pycqa.org/en/latest/user/error-codes.html

from dataclasses import dataclass

from . import core

__all__ = [
    'UmbralPolynomial',
    'IndexedSequence',
    'shift_power',
    'downgrade',
    'falling_binomial',
    'poly_multiply',
    'bivariate_downgrade_polynomial',
    'substitute_power_sums',
]


class UmbralPolynomial(core.RationalPolynomial):
    """
    Polynomial in the umbral symbol A with exact rational coefficients.
    """

    __slots__ = ()

    symbol = 'A'

    def to_text(self, variable=None):
        """Ascending form "c0 + c1*A + c2*A^2 + ..."."""
        variable = variable or self.symbol
        terms = []
        for power, coeff in enumerate(self.coefficients):
            if coeff == 0:
                continue
            mag = core.format_rational(abs(coeff))
            if power == 0:
                text = mag
            else:
                mono = variable if power == 1 else f"{variable}^{power}"
                text = mono if abs(coeff) == 1 else f"{mag}*{mono}"
            terms.append((coeff < 0, text))
        return core.join_terms(terms)


@dataclass(frozen=True)
class IndexedSequence:
    """
    The downgrade target: element k is the value substituted for A^k.
    """

    values: tuple

    def __post_init__(self):
        values = tuple(core.as_rational(v) for v in self.values)
        if not values:
            raise ValueError("indexed sequence needs at least the element a_0")
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_values(cls, values):
        return cls(tuple(values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]


def shift_power(x, n):
    """(A + x)^n expanded in powers of A."""
    x = core.as_rational(x)
    n = core.check_natural(n, 'n')
    return UmbralPolynomial(core.binomial(n, k) * x ** (n - k)
                            for k in range(n + 1))


def downgrade(poly, seq):
    """
    Replace A^k by seq[k] in an expanded polynomial and sum.
    """
    if len(seq) < poly.degree + 1:
        raise ValueError(
            "sequence of length {} cannot downgrade degree {}".format(
                len(seq), poly.degree))
    return sum((c * seq[k] for k, c in enumerate(poly.coefficients)),
               core.ExactRational(0))


def poly_multiply(a, b):
    return UmbralPolynomial((a * b).coefficients)


def falling_binomial(shift, p):
    """
    binom(A + shift, p) = (A + shift)(A + shift - 1)...(A + shift - p + 1)/p!
    expanded in powers of A.
    """
    shift = core.as_rational(shift)
    p = core.check_natural(p, 'p')
    result = UmbralPolynomial([1])
    for i in range(p):
        result = poly_multiply(result, UmbralPolynomial([shift - i, 1]))
    return result.scale(core.ExactRational(1, core.factorial(p)))


def bivariate_downgrade_polynomial(power, seq):
    """
    Expand (A + n)^power with n kept symbolic and downgrade A against
    ``seq``.  The result is a polynomial in n whose coefficient of
    n^(power-k) is C(power, k) * seq[k].
    """
    power = core.check_natural(power, 'power')
    if len(seq) < power + 1:
        raise ValueError(
            "sequence of length {} cannot downgrade degree {}".format(
                len(seq), power))
    return core.RationalPolynomial(
        core.binomial(power, power - j) * seq[power - j]
        for j in range(power + 1))


def substitute_power_sums(poly, sums):
    """
    Expand ``poly`` in powers of its variable and replace x^k by the
    polynomial ``sums[k]``.
    """
    if len(sums) < poly.degree + 1:
        raise ValueError(
            "{} polynomials cannot replace degree {}".format(
                len(sums), poly.degree))
    total = core.RationalPolynomial()
    for k, c in enumerate(poly.coefficients):
        total = total + sums[k].scale(c)
    return total

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
