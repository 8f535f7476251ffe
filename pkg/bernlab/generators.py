# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Bernoulli number prefixes by each exact definition.

Every generator returns a full prefix B_0..B_N as a
:py:class:`BernoulliSequence`; odd-index entries beyond 1 are stored as exact
zeros.  The generators share no state and serve as oracles for one another.
The only shared state is :py:data:`cache`, which memoizes De Moivre prefixes
for the other modules.
"""


# Use flake8 http://flake8.pycqa.org/en/latest/user/error-codes.html

import enum
import logging
import functools
import threading
from dataclasses import dataclass

from . import core
from . import umbral
from .core import ExactRational, binomial, factorial

__all__ = [
    'Convention',
    'DeterminantVariant',
    'BernoulliSequence',
    'gen_de_moivre',
    'gen_de_moivre_even',
    'gen_de_moivre_even_sequence',
    'gen_euler_convolution',
    'genocchi_value',
    'gen_genocchi',
    'gen_blissard_difference',
    'gen_matrix_inverse',
    'gen_egf_reciprocal',
    'gen_determinant',
    'gen_cesaro',
    'convert_convention',
    'BernoulliCache',
    'cache',
    'bernoulli_prefix',
    'bernoulli_sequence',
    'clear_cache',
    'ALL_METHODS',
]


logger = logging.getLogger(__name__)


class Convention(enum.Enum):
    """
    MINUS is the current convention with B_1 = -1/2; PLUS is the original
    one with B_1 = +1/2.
    """

    MINUS = 'minus'
    PLUS = 'plus'

    @property
    def first(self):
        """The value of index 1."""
        return ExactRational(-1 if self is Convention.MINUS else 1, 2)

    def toggled(self):
        if self is Convention.MINUS:
            return Convention.PLUS
        return Convention.MINUS


class DeterminantVariant(enum.Enum):
    HAMMOND = 'hammond'
    FACTORIAL = 'factorial'


@dataclass(frozen=True)
class BernoulliSequence:
    """
    A prefix B_0..B_N under a declared convention, tagged with the
    identifier of the procedure that produced it.
    """

    convention: Convention
    values: tuple
    method: str

    def __post_init__(self):
        object.__setattr__(self, 'values',
                           tuple(core.as_rational(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    @property
    def upto(self):
        return len(self.values) - 1

    def as_indexed(self):
        return umbral.IndexedSequence(self.values)

    def truncated(self, upto):
        return BernoulliSequence(self.convention, self.values[:upto + 1],
                                 self.method)

    def first_mismatch(self, other):
        """
        The first index where two prefixes differ over their common length,
        or None.
        """
        for index, (mine, theirs) in enumerate(zip(self.values,
                                                   other.values)):
            if mine != theirs:
                return index
        return None

    def validate(self):
        """
        Check the structural invariants and raise ValueError on the first
        violation.  Sign alternation is checked, not assumed.
        """
        vals = self.values
        if vals and vals[0] != 1:
            raise ValueError(f"{self.method}: B_0 = {vals[0]}, expected 1")
        if len(vals) > 1 and vals[1] != self.convention.first:
            raise ValueError("{}: B_1 = {}, expected {} ({})".format(
                self.method, vals[1], self.convention.first,
                self.convention.value))
        for index in range(3, len(vals), 2):
            if vals[index] != 0:
                raise ValueError(
                    f"{self.method}: B_{index} = {vals[index]} is not zero")
        for index in range(2, len(vals), 2):
            expected = 1 if (index // 2) % 2 == 1 else -1
            if vals[index] * expected <= 0:
                raise ValueError("{}: B_{} = {} breaks sign alternation"
                                 .format(self.method, index, vals[index]))
        return self

    def to_json(self):
        return {
            'method': self.method,
            'convention': self.convention.value,
            'values': [core.format_rational(v) for v in self.values],
        }

    @classmethod
    def from_json(cls, data):
        return cls(Convention(data['convention']),
                   tuple(core.parse_rational(v) for v in data['values']),
                   data['method'])


def _head(upto, conv):
    """B_0 and B_1 truncated to the requested length."""
    return [ExactRational(1), conv.first][:upto + 1]


def gen_de_moivre(upto, conv=Convention.MINUS):
    """
    Solve sum_{k<=p} C(p+1, k) B_k = 0^p forward (MINUS), or the PLUS
    recurrence binom(B - 1, p) = (-1)^p/(p+1) downgraded against the prefix
    found so far.
    """
    upto = core.check_natural(upto, 'upto')
    values = []
    if conv is Convention.MINUS:
        for p in range(upto + 1):
            acc = sum((binomial(p + 1, k) * values[k] for k in range(p)),
                      ExactRational(0))
            values.append((core.zero_power(0, p) - acc) / (p + 1))
    else:
        for p in range(upto + 1):
            coeffs = umbral.falling_binomial(-1, p).coefficients
            acc = sum((coeffs[k] * values[k] for k in range(p)),
                      ExactRational(0))
            values.append((ExactRational((-1) ** p, p + 1) - acc)
                          / coeffs[p])
    return BernoulliSequence(conv, values, 'de-moivre')


def gen_de_moivre_even(count):
    """
    B_2, B_4, ..., B_(2 count) from the even-index recurrence
    C(2m+1, 1) B_2m + C(2m+1, 3) B_(2m-2) + ... + C(2m+1, 2m-1) B_2
    = (2m-1)/2.
    """
    count = core.check_natural(count, 'count')
    if count < 1:
        raise ValueError("count must be positive")
    evens = []
    for m in range(1, count + 1):
        # evens[m - j] holds B_(2m-2j+2) for j >= 2.
        acc = sum((binomial(2 * m + 1, 2 * j - 1) * evens[m - j]
                   for j in range(2, m + 1)), ExactRational(0))
        evens.append((ExactRational(2 * m - 1, 2) - acc) / (2 * m + 1))
    return evens


def gen_de_moivre_even_sequence(upto, conv=Convention.MINUS):
    upto = core.check_natural(upto, 'upto')
    values = _head(upto, conv) + [ExactRational(0)] * max(upto - 1, 0)
    if upto >= 2:
        for m, value in enumerate(gen_de_moivre_even(upto // 2), start=1):
            values[2 * m] = value
    return BernoulliSequence(conv, values, 'de-moivre-even')


def gen_euler_convolution(upto):
    """
    (2n+1) B_2n = -sum_{k=1}^{n-1} C(2n, 2k) B_2k B_(2n-2k) for n > 1,
    seeded by B_0, B_1, B_2.
    """
    upto = core.check_natural(upto, 'upto')
    values = [ExactRational(1), ExactRational(-1, 2), ExactRational(1, 6)]
    for index in range(3, upto + 1):
        if index % 2:
            values.append(ExactRational(0))
            continue
        n = index // 2
        acc = sum((binomial(2 * n, 2 * k) * values[2 * k]
                   * values[2 * n - 2 * k] for k in range(1, n)),
                  ExactRational(0))
        values.append(-acc / (2 * n + 1))
    return BernoulliSequence(Convention.MINUS, values[:upto + 1],
                             'euler-conv')


def genocchi_value(n, m):
    """
    B_n from 2^m (2^n - 1) B_n
    = n sum_{k=2}^m C(m, k) sum_{j=1}^{k-1} (-1)^(j-1) j^(n-1), m >= n > 1.
    """
    if not 2 <= n <= m:
        raise ValueError(f"require m >= n >= 2, got n = {n}, m = {m}")
    total = 0
    alternating = 0
    for k in range(2, m + 1):
        j = k - 1
        alternating += j ** (n - 1) if j % 2 else -j ** (n - 1)
        total += binomial(m, k) * alternating
    return ExactRational(n * total, 2 ** m * (2 ** n - 1))


def gen_genocchi(upto, m=None):
    """
    Genocchi sums for 2 <= n <= upto.  The free parameter defaults to m = n
    for each index; an explicit ``m`` must cover the whole range.
    """
    upto = core.check_natural(upto, 'upto')
    if upto < 2:
        raise ValueError(f"upto must be at least 2, got {upto}")
    if m is not None and m < upto:
        raise ValueError(f"m = {m} must be at least upto = {upto}")
    values = _head(upto, Convention.MINUS)
    for n in range(2, upto + 1):
        values.append(genocchi_value(n, n if m is None else m))
    return BernoulliSequence(Convention.MINUS, values, 'genocchi')


def gen_blissard_difference(upto):
    """
    (-1)^n B_n = sum_{k=0}^n [sum_{j=0}^k (-1)^j C(k, j) (j+1)^n]/(k+1).
    """
    upto = core.check_natural(upto, 'upto')
    values = []
    for n in range(upto + 1):
        total = ExactRational(0)
        for k in range(n + 1):
            diff = sum((-1) ** j * binomial(k, j) * (j + 1) ** n
                       for j in range(k + 1))
            total += ExactRational(diff, k + 1)
        values.append(total if n % 2 == 0 else -total)
    return BernoulliSequence(Convention.MINUS, values, 'blissard-diff')


def gen_matrix_inverse(upto):
    """
    Invert the lower-triangular matrix with entries 1/(i-j+1)! and read
    B_k = k! times the entry on the k-th subdiagonal.
    """
    upto = core.check_natural(upto, 'upto')
    matrix = core.LowerTriangularMatrix.from_function(
        upto + 1, 0, lambda i, j: ExactRational(1, factorial(i - j + 1)))
    inverse = core.invert_unit_lower_triangular(matrix)
    values = [factorial(k) * inverse[k, 0] for k in range(upto + 1)]
    return BernoulliSequence(Convention.MINUS, values, 'matrix-inv')


def gen_egf_reciprocal(upto, conv=Convention.MINUS):
    """
    x/(e^x - 1) as the reciprocal of sum x^k/(k+1)!; the PLUS convention
    multiplies by e^x.
    """
    upto = core.check_natural(upto, 'upto')
    order = upto + 1
    series = core.series_reciprocal(
        [ExactRational(1, factorial(k + 1)) for k in range(order)], order)
    if conv is Convention.PLUS:
        series = core.series_multiply(
            series, [ExactRational(1, factorial(k)) for k in range(order)],
            order)
    values = [factorial(k) * c for k, c in enumerate(series)]
    return BernoulliSequence(conv, values, 'egf')


def _hammond_entry(i, j):
    # 1-based entry C(i+1, j-1).
    return binomial(i + 2, j)


def _factorial_entry(i, j):
    # 1-based entry 1/(i-j+2)!.
    return ExactRational(1, factorial(i - j + 2))


def gen_determinant(upto, variant=DeterminantVariant.HAMMOND):
    """
    (-1)^n B_n from an n x n lower Hessenberg determinant.

    The FACTORIAL variant multiplies the determinant of [1/(i-j+2)!] by n!.
    The HAMMOND variant divides the determinant of [C(i+1, j-1)] by
    (n+1)!: the typeset formula reads as a product, but n = 1 gives
    det [1] = 1 against -B_1 = 1/2 and n = 2 gives det [[1, 2], [1, 3]] = 1
    against B_2 = 1/6, which only division reproduces.
    """
    upto = core.check_natural(upto, 'upto')
    variant = DeterminantVariant(variant)
    values = [ExactRational(1)]
    for n in range(1, upto + 1):
        if variant is DeterminantVariant.HAMMOND:
            matrix = core.LowerTriangularMatrix.from_function(
                n, 1, _hammond_entry)
            signed = core.determinant(matrix) / factorial(n + 1)
        else:
            matrix = core.LowerTriangularMatrix.from_function(
                n, 1, _factorial_entry)
            signed = core.determinant(matrix) * factorial(n)
        values.append(signed if n % 2 == 0 else -signed)
    return BernoulliSequence(Convention.MINUS, values,
                             f'det-{variant.value}')


def gen_cesaro(upto):
    """
    PLUS numbers from k = sum_{j<k} C(k, j) B_j, i.e. the sum of powers
    formula evaluated at n = 1.
    """
    upto = core.check_natural(upto, 'upto')
    values = []
    for q in range(upto + 1):
        acc = sum((binomial(q + 1, j) * values[j] for j in range(q)),
                  ExactRational(0))
        values.append((q + 1 - acc) / (q + 1))
    return BernoulliSequence(Convention.PLUS, values, 'cesaro')


def convert_convention(seq):
    """B+_p = (-1)^p B_p; an involution that fixes every even index."""
    values = [-v if k % 2 else v for k, v in enumerate(seq.values)]
    return BernoulliSequence(seq.convention.toggled(), values, seq.method)


class BernoulliCache:
    """
    Memo of the longest De Moivre prefix computed per convention.  Access is
    serialized by a lock so one instance can be shared across threads.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._store = {}

    def prefix(self, upto, conv=Convention.MINUS):
        upto = core.check_natural(upto, 'upto')
        with self._lock:
            values = self._store.get(conv, ())
            if len(values) <= upto:
                logger.debug("extend %s cache from %d to %d values",
                             conv.value, len(values), upto + 1)
                values = gen_de_moivre(upto, conv).values
                self._store[conv] = values
            return values[:upto + 1]

    def clear(self):
        with self._lock:
            self._store.clear()


cache = BernoulliCache()


def bernoulli_prefix(upto, conv=Convention.MINUS):
    """B_0..B_upto as a tuple, from the module cache."""
    return cache.prefix(upto, conv)


def bernoulli_sequence(upto, conv=Convention.MINUS):
    return BernoulliSequence(conv, bernoulli_prefix(upto, conv), 'de-moivre')


def clear_cache():
    cache.clear()


def _in_convention(seq, conv):
    if seq.convention is conv:
        return seq
    return convert_convention(seq)


def _minus_method(func, upto, conv):
    return _in_convention(func(upto), conv)


def _genocchi_method(upto, conv):
    seq = gen_genocchi(max(upto, 2)).truncated(upto)
    return _in_convention(seq, conv)


def _determinant_method(variant, upto, conv):
    return _in_convention(gen_determinant(upto, variant), conv)


def _cesaro_method(upto, conv):
    return _in_convention(gen_cesaro(upto), conv)


# Uniform (upto, convention) -> BernoulliSequence callables keyed by the
# command-line method identifier.
ALL_METHODS = {
    'de-moivre': gen_de_moivre,
    'de-moivre-even': gen_de_moivre_even_sequence,
    'euler-conv': functools.partial(_minus_method, gen_euler_convolution),
    'genocchi': _genocchi_method,
    'blissard-diff': functools.partial(_minus_method,
                                       gen_blissard_difference),
    'matrix-inv': functools.partial(_minus_method, gen_matrix_inverse),
    'egf': gen_egf_reciprocal,
    'det-hammond': functools.partial(_determinant_method,
                                     DeterminantVariant.HAMMOND),
    'det-factorial': functools.partial(_determinant_method,
                                       DeterminantVariant.FACTORIAL),
    'cesaro': _cesaro_method,
}

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
