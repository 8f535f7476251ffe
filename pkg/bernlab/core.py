# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Exact rational scalars, combinatorics, dense rational polynomials, truncated
power series, and banded lower-triangular matrices.
"""


# Use flake8 http://flake8.pycqa.org/en/latest/user/error-codes.html

import re
import math
import numbers
import logging
from fractions import Fraction

import numpy as np

__all__ = [
    'ExactRational',
    'as_rational',
    'format_rational',
    'parse_rational',
    'binomial',
    'factorial',
    'zero_power',
    'RationalPolynomial',
    'series_multiply',
    'series_reciprocal',
    'LowerTriangularMatrix',
    'invert_unit_lower_triangular',
    'determinant',
    'cofactor_determinant',
]


logger = logging.getLogger(__name__)

# Fraction keeps gcd(|numerator|, denominator) = 1 and denominator > 0 after
# every operation.
ExactRational = Fraction

_RATIONAL_PATTERN = re.compile(r'^([+-]?)(\d+)(?:/(\d+))?$')


def as_rational(value):
    """Convert an integer or rational to :py:class:`ExactRational`."""
    if isinstance(value, bool) or not isinstance(value, numbers.Rational):
        raise TypeError(f"expect an integer or rational, got {value!r}")
    return Fraction(value)


def check_natural(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return int(value)


def format_rational(value):
    """
    Canonical text form "num/den"; the "/den" part is omitted when the
    denominator is 1.
    """
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    """
    Parse the canonical text form.  An optional leading sign, decimal digits
    of any size, and an optional "/digits" denominator are accepted.
    """
    match = _RATIONAL_PATTERN.match(text.strip())
    if match is None:
        raise ValueError(f"invalid rational literal: {text!r}")
    sign, num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    num = -int(num) if sign == '-' else int(num)
    return Fraction(num, den)


def binomial(n, k):
    """C(n, k), with C(n, k) = 0 when k < 0 or k > n."""
    n = check_natural(n, 'n')
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n):
    return math.factorial(check_natural(n, 'n'))


def zero_power(base, exponent):
    """base ** exponent with the convention 0 ** 0 = 1."""
    exponent = check_natural(exponent, 'exponent')
    if exponent == 0:
        return 1
    return base ** exponent


class RationalPolynomial:
    """
    Immutable dense polynomial with exact rational coefficients.  Index j of
    :py:attr:`coefficients` holds the coefficient of the j-th power.  Trailing
    zeros are trimmed, so the zero polynomial has no coefficient.
    """

    __slots__ = ('_coeffs',)

    # Variable name used by the human-readable rendering.
    symbol = 'x'

    def __init__(self, coefficients=()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, power, coefficient=1):
        power = check_natural(power, 'power')
        return cls([0] * power + [coefficient])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, power):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def is_zero(self):
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"

    def _coerce(self, other):
        if isinstance(other, RationalPolynomial):
            return other
        return type(self).constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return type(self)(self.coefficient(i) + other.coefficient(i)
                          for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return type(self)()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return type(self)(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor):
        factor = as_rational(factor)
        return type(self)(c * factor for c in self._coeffs)

    def derivative(self):
        return type(self)(i * c for i, c in enumerate(self._coeffs) if i)

    def antiderivative(self):
        """The antiderivative vanishing at 0."""
        return type(self)([0] + [c / (i + 1)
                                 for i, c in enumerate(self._coeffs)])

    def evaluate(self, point):
        """Horner evaluation at an integer or rational point."""
        point = as_rational(point)
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * point + c
        return value

    __call__ = evaluate

    def shift(self, offset):
        """The polynomial p(x + offset)."""
        step = type(self)([offset, 1])
        value = type(self)()
        for c in reversed(self._coeffs):
            value = value * step + c
        return value

    def reflect(self):
        """The polynomial p(-x)."""
        return type(self)(-c if i % 2 else c
                          for i, c in enumerate(self._coeffs))

    def divmod(self, divisor):
        """Exact long division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dlead = divisor._coeffs[-1]
        ddeg = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - ddeg, 0)
        for offset in range(len(rem) - 1 - ddeg, -1, -1):
            factor = rem[offset + ddeg] / dlead
            quot[offset] = factor
            if factor == 0:
                continue
            for i, d in enumerate(divisor._coeffs):
                rem[offset + i] -= factor * d
        return type(self)(quot), type(self)(rem)

    def to_text(self, variable=None):
        """
        Human form in descending powers, e.g. "n^4/4 - n^3/2 + n^2/4".
        """
        variable = variable or self.symbol
        terms = []
        for power in range(self.degree, -1, -1):
            coeff = self._coeffs[power]
            if coeff == 0:
                continue
            terms.append((coeff < 0, _format_term(abs(coeff), power,
                                                  variable)))
        return join_terms(terms)


def _format_term(magnitude, power, variable):
    if power == 0:
        return format_rational(magnitude)
    mono = variable if power == 1 else f"{variable}^{power}"
    num, den = magnitude.numerator, magnitude.denominator
    text = mono if num == 1 else f"{num}*{mono}"
    if den != 1:
        text = f"{text}/{den}"
    return text


def join_terms(terms):
    if not terms:
        return '0'
    negative, text = terms[0]
    parts = ['-' + text if negative else text]
    for negative, text in terms[1:]:
        parts.append(('- ' if negative else '+ ') + text)
    return ' '.join(parts)


def series_multiply(a, b, order):
    """Product of two power series truncated to ``order`` coefficients."""
    order = check_natural(order, 'order')
    a = [as_rational(c) for c in a[:order]]
    b = [as_rational(c) for c in b[:order]]
    out = [Fraction(0)] * order
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(min(len(b), order - i)):
            out[i + j] += x * b[j]
    return out


def series_reciprocal(coefficients, order):
    """
    Reciprocal of a power series truncated to ``order`` coefficients.  The
    constant coefficient must not vanish.
    """
    order = check_natural(order, 'order')
    a = [as_rational(c) for c in coefficients]
    if not a or a[0] == 0:
        raise ValueError("series with zero constant term has no reciprocal")
    out = []
    for k in range(order):
        acc = Fraction(int(k == 0))
        for j in range(1, min(k, len(a) - 1) + 1):
            acc -= a[j] * out[k - j]
        out.append(acc / a[0])
    return out


class LowerTriangularMatrix:
    """
    Square exact-rational matrix whose entries with column > row + band are
    zero.  Band 0 is lower triangular; band 1 is lower Hessenberg.

    Rows and columns are indexed from 0: entry (i, j) written with 1-based
    indices is entry (i - 1, j - 1) here.
    """

    def __init__(self, entries, band=0):
        arr = np.array([[as_rational(v) for v in row] for row in entries],
                       dtype=object)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"matrix is not square (shape = {arr.shape})")
        if arr.shape[0] < 1:
            raise ValueError("matrix dimension must be positive")
        band = check_natural(band, 'band')
        for i in range(arr.shape[0]):
            for j in range(i + band + 1, arr.shape[1]):
                if arr[i, j] != 0:
                    raise ValueError(
                        f"entry ({i}, {j}) is nonzero above band {band}")
        arr.flags.writeable = False
        self._entries = arr
        self.band = band

    @classmethod
    def from_function(cls, dimension, band, entry):
        """
        Build from ``entry(row, col)`` evaluated at and below the band.
        """
        dimension = check_natural(dimension, 'dimension')
        rows = [[entry(i, j) if j <= i + band else 0
                 for j in range(dimension)] for i in range(dimension)]
        return cls(rows, band=band)

    @classmethod
    def identity(cls, dimension):
        return cls.from_function(dimension, 0, lambda i, j: int(i == j))

    @property
    def dimension(self):
        return self._entries.shape[0]

    @property
    def entries(self):
        return self._entries

    def __getitem__(self, key):
        return self._entries[key]

    def __eq__(self, other):
        if not isinstance(other, LowerTriangularMatrix):
            return NotImplemented
        return (self.dimension == other.dimension
                and bool(np.all(self._entries == other._entries)))

    def __hash__(self):
        return hash(tuple(self._entries.ravel()))

    def tolist(self):
        return self._entries.tolist()

    def is_lower_triangular(self):
        return all(self._entries[i, j] == 0
                   for i in range(self.dimension)
                   for j in range(i + 1, self.dimension))

    def matmul(self, other):
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch: {} != {}".format(
                self.dimension, other.dimension))
        product = self._entries.dot(other._entries)
        band = min(self.band + other.band, self.dimension - 1)
        return LowerTriangularMatrix(product.tolist(), band=band)


def invert_unit_lower_triangular(matrix):
    """
    Exact inverse of a lower-triangular matrix by forward substitution,
    column by column.
    """
    if not matrix.is_lower_triangular():
        raise ValueError("matrix is not lower triangular")
    size = matrix.dimension
    low = matrix.entries
    for i in range(size):
        if low[i, i] == 0:
            raise ValueError(f"zero diagonal entry at ({i}, {i})")
    inv = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        inv[i][i] = 1 / low[i, i]
        for j in range(i):
            acc = sum((low[i, k] * inv[k][j] for k in range(j, i)),
                      Fraction(0))
            inv[i][j] = -acc / low[i, i]
    return LowerTriangularMatrix(inv, band=0)


def _hessenberg_determinant(matrix):
    # Leading-minor recurrence, 1-based:
    # D_k = sum_j (-1)^(k-j) h(k, j) h(j, j+1) ... h(k-1, k) D_(j-1).
    h = matrix.entries
    minors = [Fraction(1)]
    for k in range(1, matrix.dimension + 1):
        total = Fraction(0)
        chain = Fraction(1)
        for j in range(k, 0, -1):
            term = h[k - 1, j - 1] * chain * minors[j - 1]
            total += term if (k - j) % 2 == 0 else -term
            if j > 1:
                chain *= h[j - 2, j - 1]
                if chain == 0:
                    break
        minors.append(total)
    return minors[-1]


def _bareiss_determinant(matrix):
    size = matrix.dimension
    scale = math.lcm(*(v.denominator for v in matrix.entries.ravel()))
    a = [[int(v * scale) for v in row] for row in matrix.entries]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0),
                        None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[-1][-1], scale ** size)


def determinant(matrix):
    """
    Exact determinant.  Matrices with band <= 1 go through the O(n^2)
    leading-minor recurrence; wider bands use fraction-free elimination on
    the integer matrix obtained by clearing denominators.
    """
    if matrix.band <= 1:
        return _hessenberg_determinant(matrix)
    return _bareiss_determinant(matrix)


def cofactor_determinant(entries):
    """Laplace expansion along the first row; for small reference cases."""
    rows = [list(row) for row in entries]
    size = len(rows)
    if size == 1:
        return as_rational(rows[0][0])
    total = Fraction(0)
    for j in range(size):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * cofactor_determinant(minor)
        total += term if j % 2 == 0 else -term
    return total

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
