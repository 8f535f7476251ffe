# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Floating-point checks of the integral, series and asymptotic representations
of the Bernoulli numbers.  Exact values always come from
:py:func:`bernlab.generators.bernoulli_prefix`; this module only evaluates the
other side of each identity numerically and reports how far apart they are.
"""


# Use flake8 http://flake8.pycqa.org/en/latest/user/error-codes.html

import enum
import math
import logging
from dataclasses import dataclass, replace

import numpy as np

from . import core
from . import generators
from .core import ExactRational

__all__ = [
    'Scheme',
    'PlanaVariant',
    'GlaisherVariant',
    'CotVariant',
    'QuadratureSpec',
    'CheckReport',
    'integrate',
    'check_zeta_even',
    'check_plana',
    'check_glaisher',
    'check_jensen',
    'check_cot_egf',
    'check_abel_integral',
    'stirling_log_factorial',
    'stirling_divergence_sweep',
    'run_default_grid',
]


logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
ENVELOPE_FLOOR = 1.0e-30


class Scheme(enum.Enum):
    SIMPSON = 'composite-simpson'
    GAUSS_LEGENDRE = 'gauss-legendre'


class PlanaVariant(enum.Enum):
    POWER_OVER_EXPM1 = 'expm1'
    SINH_SQUARED = 'sinh2'
    POWER_OVER_EXPP1 = 'expp1'
    COSH_SQUARED = 'cosh2'


class GlaisherVariant(enum.Enum):
    EXP_MINUS = 'exp-minus'
    ODD_EXP_PLUS = 'odd-exp-plus'


class CotVariant(enum.Enum):
    COS_2BX = 'cos2bx'
    SIN_2BX = 'sin2bx'
    COS_BX_HALF = 'cosbxhalf'


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Composite rule on [lower, upper_cutoff].  ``order`` is the number of
    Gauss-Legendre nodes per panel and is ignored by Simpson.
    """

    upper_cutoff: float
    panel_count: int = 64
    scheme: Scheme = Scheme.GAUSS_LEGENDRE
    order: int = 16

    def __post_init__(self):
        if not self.upper_cutoff > 0:
            raise ValueError("upper_cutoff must be positive, got {}".format(
                self.upper_cutoff))
        if self.panel_count < 8:
            raise ValueError("panel_count must be at least 8, got {}".format(
                self.panel_count))
        object.__setattr__(self, 'scheme', Scheme(self.scheme))

    @classmethod
    def for_envelope(cls, power, rate, **kw):
        """
        Cut off where t^power * exp(-rate * t) has fallen below 1e-30 on its
        decreasing side.
        """
        if not rate > 0:
            raise ValueError("decay rate must be positive, got {}".format(
                rate))
        log_floor = math.log(ENVELOPE_FLOOR)
        t = max(1.0, power / rate)
        while power * math.log(t) - rate * t >= log_floor:
            t *= 1.125
        return cls(upper_cutoff=t, **kw)

    def doubled(self):
        return replace(self, panel_count=2 * self.panel_count)


@dataclass(frozen=True)
class CheckReport:
    """
    Outcome of one numeric check.  ``reference`` is the floating-point value
    of the exact side and ``exact_value`` the rational it derives from, when
    there is one.  ``rel_error`` is None when the reference is zero.  The
    absolute error decides ``passed`` when ``absolute`` is set or the
    reference is zero, the relative error otherwise.
    """

    identity: str
    exact_value: object
    reference: float
    numeric_value: float
    abs_error: float
    rel_error: object
    tolerance: float
    passed: bool
    converged: bool = True
    note: str = ''
    absolute: bool = False

    @property
    def error(self):
        """The error measure ``passed`` is decided on."""
        if self.absolute or self.rel_error is None:
            return self.abs_error
        return self.rel_error

    def to_json(self):
        exact = None
        if self.exact_value is not None:
            exact = core.format_rational(self.exact_value)
        return {
            'identity': self.identity,
            'exact_value': exact,
            'reference': self.reference,
            'numeric_value': self.numeric_value,
            'abs_error': self.abs_error,
            'rel_error': self.rel_error,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'converged': self.converged,
            'note': self.note,
            'absolute': self.absolute,
        }


def _report(identity, exact, reference, numeric, tolerance, relative=True,
            converged=True, note=''):
    reference = float(reference)
    numeric = float(numeric)
    abs_error = abs(numeric - reference)
    rel_error = None
    if reference != 0.0:
        rel_error = abs_error / abs(reference)
    measured = rel_error if relative and rel_error is not None else abs_error
    passed = bool(measured <= tolerance and converged)
    return CheckReport(identity=identity, exact_value=exact,
                       reference=reference, numeric_value=numeric,
                       abs_error=abs_error, rel_error=rel_error,
                       tolerance=tolerance, passed=passed,
                       converged=converged, note=note, absolute=not relative)


def _check_positive(value, name):
    value = core.check_natural(value, name)
    if value < 1:
        raise ValueError("{} must be positive, got {}".format(name, value))
    return value


def _bernoulli(index):
    return generators.bernoulli_prefix(index)[index]


def _to_float(exact, what):
    try:
        value = float(exact)
    except OverflowError:
        value = math.inf
    if not math.isfinite(value):
        raise ValueError("{} is beyond the float64 range".format(what))
    return value


def _log_envelope(t, m, rate=TWO_PI):
    # log of |t|^m e^(-rate |t|); the power alone overflows for large m
    t = np.abs(t)
    if m == 0:
        return -rate * t
    with np.errstate(divide='ignore'):
        return m * np.log(t) - rate * t


def integrate(func, spec, lower=0.0):
    """
    Composite quadrature of a vectorized ``func`` from ``lower`` to
    ``spec.upper_cutoff``.
    """
    edges = np.linspace(lower, spec.upper_cutoff, spec.panel_count + 1)
    if spec.scheme is Scheme.GAUSS_LEGENDRE:
        nodes, weights = np.polynomial.legendre.leggauss(spec.order)
        mid = 0.5 * (edges[1:] + edges[:-1])
        half = 0.5 * (edges[1:] - edges[:-1])
        t = mid[:, None] + half[:, None] * nodes[None, :]
        return np.sum(func(t) * weights[None, :] * half[:, None])
    # Simpson: one parabola per panel.
    t = np.linspace(lower, spec.upper_cutoff, 2 * spec.panel_count + 1)
    h = (spec.upper_cutoff - lower) / (2 * spec.panel_count)
    weights = np.ones_like(t)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return h / 3.0 * np.sum(func(t) * weights)


def _integrate_checked(func, spec, reference, tolerance, lower=0.0):
    """
    Integrate at ``spec`` and at twice the panel count; the result is
    converged when the two differ by at most tolerance/10 in the applicable
    measure.
    """
    coarse = integrate(func, spec, lower)
    fine = integrate(func, spec.doubled(), lower)
    change = abs(fine - coarse)
    if reference != 0:
        change /= abs(reference)
    converged = bool(change <= tolerance / 10.0)
    if not converged:
        logger.info("quadrature changed by %g on doubling %d panels",
                    change, spec.panel_count)
    return fine, converged


def _with_limit(t, value, limit):
    return np.where(t == 0.0, limit, value)


def _power_over_expm1(m):
    # t^m / (e^(2 pi t) - 1)
    def func(t):
        with np.errstate(divide='ignore', invalid='ignore'):
            value = np.exp(_log_envelope(t, m)) / -np.expm1(-TWO_PI * t)
        return _with_limit(t, value, 1.0 / TWO_PI if m == 1 else 0.0)
    return func


def _power_over_sinh2(m):
    # t^m / sinh^2(pi t)
    def func(t):
        with np.errstate(divide='ignore', invalid='ignore'):
            value = (4.0 * np.exp(_log_envelope(t, m))
                     / np.expm1(-TWO_PI * t) ** 2)
        return _with_limit(t, value, 1.0 / math.pi ** 2 if m == 2 else 0.0)
    return func


def _power_over_expp1(m):
    # t^m / (e^(2 pi t) + 1)
    def func(t):
        decay = np.exp(-TWO_PI * t)
        return np.exp(_log_envelope(t, m)) / (1.0 + decay)
    return func


def _power_over_cosh2(m):
    def func(t):
        decay = np.exp(-TWO_PI * np.abs(t))
        return 4.0 * np.exp(_log_envelope(t, m)) / (1.0 + decay) ** 2
    return func


def check_zeta_even(n, terms=100000, tolerance=1.0e-6):
    """
    zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_2n / (2 (2n)!), with the partial sum
    closed by the integral tail from terms + 1/2.
    """
    n = _check_positive(n, 'n')
    terms = core.check_natural(terms, 'terms')
    if terms < 10:
        raise ValueError("terms must be at least 10, got {}".format(terms))
    b2n = _bernoulli(2 * n)
    k = np.arange(terms, 0, -1, dtype='float64')
    partial = np.sum(k ** (-2.0 * n))
    tail = (terms + 0.5) ** (1 - 2 * n) / (2 * n - 1)
    scaled = (-1) ** (n - 1) * b2n / (2 * core.factorial(2 * n))
    reference = _to_float(scaled * ExactRational(TWO_PI) ** (2 * n),
                          "zeta({})".format(2 * n))
    return _report('zeta({})'.format(2 * n), b2n, reference, partial + tail,
                   tolerance)


def check_plana(n, variant=PlanaVariant.POWER_OVER_EXPM1, spec=None,
                panel_count=64,
                tolerance=1.0e-8):
    """
    (-1)^(n-1) B_2n = 4n int t^(2n-1)/(e^(2 pi t) - 1)
                    = pi int t^(2n)/sinh^2(pi t)
    over (0, inf), and the same with (1 - 2^(1-2n)) on the left for
    e^(2 pi t) + 1 and cosh^2.
    """
    n = _check_positive(n, 'n')
    variant = PlanaVariant(variant)
    exact = (-1) ** (n - 1) * _bernoulli(2 * n)
    if variant in (PlanaVariant.POWER_OVER_EXPP1,
                   PlanaVariant.COSH_SQUARED):
        exact *= 1 - ExactRational(2) ** (1 - 2 * n)
    if variant is PlanaVariant.POWER_OVER_EXPM1:
        power, scale, func = 2 * n - 1, 4.0 * n, _power_over_expm1(2 * n - 1)
    elif variant is PlanaVariant.SINH_SQUARED:
        power, scale, func = 2 * n, math.pi, _power_over_sinh2(2 * n)
    elif variant is PlanaVariant.POWER_OVER_EXPP1:
        power, scale, func = 2 * n - 1, 4.0 * n, _power_over_expp1(2 * n - 1)
    else:
        power, scale, func = 2 * n, math.pi, _power_over_cosh2(2 * n)
    if spec is None:
        spec = QuadratureSpec.for_envelope(power, TWO_PI,
                                           panel_count=panel_count)
    reference = _to_float(exact, "plana exact value for n = {}".format(n))
    value, converged = _integrate_checked(
        lambda t: scale * func(t), spec, reference, tolerance)
    return _report('plana-{}({})'.format(variant.value, n), exact, reference,
                   value, tolerance, converged=converged)


def check_glaisher(n, variant=GlaisherVariant.EXP_MINUS,
                   tolerance=1.0e-8, typeset_correction=False):
    """
    B_(4n+2) = 2(4n+2) sum_(k>=1) k^(4n+1)/(e^(2 pi k) - 1) + 0^n/(2 pi)
    (2^(4n+1) - 1) B_(4n+2) = 2(4n+2) sum_(k odd) k^(4n+1)/(e^(pi k) + 1)

    The n = 0 correction that makes the first series exact is 1/(2 pi).
    With ``typeset_correction`` the value 1/(4 pi) is used instead and the
    residual is reported in the note.
    """
    n = core.check_natural(n, 'n')
    variant = GlaisherVariant(variant)
    index = 4 * n + 2
    power = 4 * n + 1
    exact = _bernoulli(index)
    if variant is GlaisherVariant.EXP_MINUS:
        rate = TWO_PI
    else:
        rate = math.pi
        exact *= 2 ** power - 1
    reference = _to_float(exact, "glaisher exact value for n = {}".format(n))
    last = math.ceil(QuadratureSpec.for_envelope(power, rate).upper_cutoff)
    if variant is GlaisherVariant.EXP_MINUS:
        k = np.arange(last, 0, -1, dtype='float64')
        terms = (np.exp(_log_envelope(k, power, rate))
                 / -np.expm1(-rate * k))
    else:
        k = np.arange(last if last % 2 else last + 1, 0, -2, dtype='float64')
        decay = np.exp(-rate * k)
        terms = np.exp(_log_envelope(k, power, rate)) / (1.0 + decay)
    value = 2.0 * index * np.sum(terms)
    note = ''
    if variant is GlaisherVariant.EXP_MINUS and n == 0:
        correct = 1.0 / TWO_PI
        used = 1.0 / (2.0 * TWO_PI) if typeset_correction else correct
        value += used
        if used != correct:
            note = "residual {:.6g} from the 1/(4 pi) correction".format(
                correct - used)
            logger.warning("glaisher n=0: %s", note)
    return _report('glaisher-{}({})'.format(variant.value, n), exact,
                   reference, value, tolerance, note=note)


def check_jensen(n, spec=None, tolerance=1.0e-6, panel_count=64):
    """
    (-1)^n B_n = (pi/2) int (1/2 + it)^n / cosh^2(pi t) over the real line.
    The imaginary part cancels by symmetry and must stay below tolerance.
    """
    n = core.check_natural(n, 'n')
    exact = (-1) ** n * _bernoulli(n)
    if spec is None:
        spec = QuadratureSpec.for_envelope(n, TWO_PI,
                                           panel_count=panel_count)
    half_width = spec.upper_cutoff
    reference = _to_float(exact, "B_{}".format(n))

    def func(t):
        decay = np.exp(-TWO_PI * np.abs(t))
        phase = n * np.log(0.5 + 1j * t) - TWO_PI * np.abs(t)
        return 2.0 * math.pi * np.exp(phase) / (1.0 + decay) ** 2

    value, converged = _integrate_checked(func, spec, reference, tolerance,
                                          lower=-half_width)
    note = ''
    if abs(value.imag) > tolerance:
        converged = False
        note = "imaginary part {:.3g} did not cancel".format(value.imag)
    return _report('jensen({})'.format(n), exact, reference, value.real,
                   tolerance, converged=converged, note=note)


def _cot_reference(variant, x):
    if variant is CotVariant.COS_2BX:
        return x / math.tan(x)
    if variant is CotVariant.SIN_2BX:
        return -x
    if x == 0.0:
        return 1.0
    return 0.5 * x / math.tan(0.5 * x)


def check_cot_egf(x, terms=40, variant=CotVariant.COS_2BX,
                  tolerance=1.0e-10):
    """
    Truncated umbral series cos 2Bx = x cot x, sin 2Bx = -x and
    cos Bx = (x/2) cot(x/2), compared by absolute error.
    """
    x = float(x)
    terms = _check_positive(terms, 'terms')
    variant = CotVariant(variant)
    if variant is CotVariant.COS_BX_HALF:
        if not abs(x) < TWO_PI:
            raise ValueError("x = {} outside |x| < 2*pi".format(x))
    elif not 0.0 < abs(x) < math.pi:
        raise ValueError("x = {} outside 0 < |x| < pi".format(x))
    if variant is CotVariant.SIN_2BX:
        bern = generators.bernoulli_prefix(2 * terms - 1)
        indices = [2 * k + 1 for k in range(terms)]
        arg = 2.0 * x
    else:
        bern = generators.bernoulli_prefix(2 * terms - 2)
        indices = [2 * k for k in range(terms)]
        arg = 2.0 * x if variant is CotVariant.COS_2BX else x
    value = 0.0
    for k, index in enumerate(indices):
        coeff = (-1) ** k * bern[index] / core.factorial(index)
        value += float(coeff) * arg ** index
    return _report('egf-{}({:g})'.format(variant.value, x), None,
                   _cot_reference(variant, x), value, tolerance,
                   relative=False)


def check_abel_integral(x, spec=None, terms=40, tolerance=1.0e-8,
                        panel_count=64):
    """
    (x/2) cot(x/2) = 1 - 2x int sinh(xt)/(e^(2 pi t) - 1) over (0, inf),
    compared against the closed form and the truncated cos Bx series.
    """
    x = float(x)
    if not 0.0 < abs(x) < TWO_PI:
        raise ValueError("x = {} outside 0 < |x| < 2*pi".format(x))
    if spec is None:
        spec = QuadratureSpec.for_envelope(0, TWO_PI - abs(x),
                                           panel_count=panel_count)

    def func(t):
        with np.errstate(divide='ignore', invalid='ignore'):
            value = (0.5 * (np.exp((x - TWO_PI) * t)
                            - np.exp((-x - TWO_PI) * t))
                     / -np.expm1(-TWO_PI * t))
        return -2.0 * x * _with_limit(t, value, x / TWO_PI)

    reference = _cot_reference(CotVariant.COS_BX_HALF, x)
    integral, converged = _integrate_checked(func, spec, reference,
                                             tolerance)
    value = 1.0 + integral
    series = check_cot_egf(x, terms, CotVariant.COS_BX_HALF,
                           tolerance=tolerance)
    report = _report('abel({:g})'.format(x), None, reference, value,
                     tolerance, converged=converged,
                     note="series deviates by {:.3g}".format(
                         abs(value - series.numeric_value)))
    if abs(value - series.numeric_value) > tolerance * abs(reference):
        report = replace(report, passed=False)
    return report


def _stirling_terms(n, k_max):
    bern = generators.bernoulli_prefix(2 * k_max + 2)
    terms = []
    for k in range(1, k_max + 2):
        term = (bern[2 * k] / (2 * k * (2 * k - 1))
                / ExactRational(n) ** (2 * k - 1))
        terms.append(_to_float(term, "Stirling term k = {}".format(k)))
    return terms


def _stirling_base(n):
    return (n - 0.5) * math.log(n) - n + 0.5 * math.log(TWO_PI)


def stirling_log_factorial(n, k_terms=3):
    """
    log (n-1)! against (n - 1/2) log n - n + log sqrt(2 pi)
    + sum_(k<=K) B_2k / (2k (2k-1) n^(2k-1)).

    The series diverges; it passes when the error is within the first
    omitted term plus the rounding floor of the evaluation.
    """
    n = core.check_natural(n, 'n')
    if n < 2:
        raise ValueError("n must be at least 2, got {}".format(n))
    k_terms = core.check_natural(k_terms, 'k_terms')
    terms = _stirling_terms(n, k_terms)
    approx = _stirling_base(n) + math.fsum(terms[:k_terms])
    exact = math.log(math.factorial(n - 1))
    omitted = abs(terms[k_terms])
    floor = 64.0 * np.finfo('float64').eps * (
        abs((n - 0.5) * math.log(n)) + n)
    tolerance = omitted + floor
    abs_error = abs(approx - exact)
    rel_error = abs_error / exact if exact != 0.0 else None
    return CheckReport(
        identity='stirling({},{})'.format(n, k_terms), exact_value=None,
        reference=exact, numeric_value=approx, abs_error=abs_error,
        rel_error=rel_error, tolerance=tolerance,
        passed=bool(abs_error <= tolerance), absolute=True,
        note="first omitted term {:.3g}".format(omitted))


def stirling_divergence_sweep(n, k_max=12):
    """
    Absolute error of the truncated series for K = 0..k_max and the K at
    which it is smallest.
    """
    n = core.check_natural(n, 'n')
    if n < 2:
        raise ValueError("n must be at least 2, got {}".format(n))
    k_max = core.check_natural(k_max, 'k_max')
    terms = _stirling_terms(n, k_max)
    exact = math.log(math.factorial(n - 1))
    errors = [abs(_stirling_base(n) + math.fsum(terms[:k]) - exact)
              for k in range(k_max + 1)]
    return errors, int(np.argmin(errors))


def run_default_grid(tolerance=None):
    """Every check over its default grid, ordered by identity."""
    def tol(default):
        return default if tolerance is None else tolerance

    reports = []
    for n in range(1, 7):
        reports.append(check_zeta_even(n, tolerance=tol(1.0e-6)))
    for variant in PlanaVariant:
        for n in range(1, 9):
            reports.append(check_plana(n, variant, tolerance=tol(1.0e-8)))
    for variant in GlaisherVariant:
        for n in range(3):
            reports.append(check_glaisher(n, variant,
                                          tolerance=tol(1.0e-8)))
    for n in range(9):
        reports.append(check_jensen(n, tolerance=tol(1.0e-6)))
    for variant in CotVariant:
        for x in (0.5, 1.0, 2.0):
            reports.append(check_cot_egf(x, variant=variant,
                                         tolerance=tol(1.0e-10)))
    for x in (0.001, 1.0, 4.0):
        reports.append(check_abel_integral(x, tolerance=tol(1.0e-8)))
    reports.append(stirling_log_factorial(10, 3))
    reports.append(stirling_log_factorial(100, 2))
    return sorted(reports, key=lambda r: r.identity)

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
