# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Cross-method and identity suites run by ``bernlab verify``.

Each suite returns a :py:class:`SuiteResult`; the first failing comparison of
a suite ends it and is described in ``detail`` with the differing index and
both values.
"""


# Use flake8 http://flake8.pycqa.org/en/latest/user/error-codes.html

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import core
from . import umbral
from . import generators
from . import powersum
from . import analytic
from .core import ExactRational, RationalPolynomial
from .generators import Convention

__all__ = [
    'SuiteResult',
    'SUITES',
    'run_suites',
]


logger = logging.getLogger(__name__)

ORACLE_MAX_POWER = 12
ORACLE_MAX_N = 200


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str = ''

    def to_json(self):
        return {
            'name': self.name,
            'passed': self.passed,
            'checked': self.checked,
            'detail': self.detail,
        }


class _Mismatch(Exception):
    pass


class _Counter:
    """Count comparisons and raise on the first failing one."""

    def __init__(self):
        self.checked = 0

    def equal(self, actual, expected, what):
        self.checked += 1
        if actual != expected:
            raise _Mismatch("{}: {} != {}".format(
                what, _show(actual), _show(expected)))

    def true(self, flag, what):
        self.checked += 1
        if not flag:
            raise _Mismatch(what)


def _show(value):
    if isinstance(value, RationalPolynomial):
        return value.to_text('n')
    try:
        return core.format_rational(value)
    except TypeError:
        return repr(value)


def _sequence_agreement(counter, seq, reference, label):
    counter.checked += 1
    index = seq.first_mismatch(reference)
    if len(seq) != len(reference):
        raise _Mismatch("{} returned {} values, expected {}".format(
            label, len(seq), len(reference)))
    if index is not None:
        raise _Mismatch("{} differs at index {}: {} != {}".format(
            label, index, _show(seq[index]), _show(reference[index])))


def suite_generator_agreement(counter, upto):
    for conv in Convention:
        reference = generators.bernoulli_sequence(upto, conv)
        for name in sorted(generators.ALL_METHODS):
            seq = generators.ALL_METHODS[name](upto, conv)
            _sequence_agreement(counter, seq, reference,
                                "{} ({})".format(name, conv.value))


def suite_generator_invariants(counter, upto):
    for conv in Convention:
        seqs = [generators.bernoulli_sequence(upto, conv)]
        seqs.extend(generators.ALL_METHODS[name](upto, conv)
                    for name in sorted(generators.ALL_METHODS))
        for seq in seqs:
            try:
                seq.validate()
            except ValueError as e:
                raise _Mismatch(str(e)) from None
            counter.checked += 1


def suite_generator_convention(counter, upto):
    minus = generators.bernoulli_sequence(upto, Convention.MINUS)
    plus = generators.bernoulli_sequence(upto, Convention.PLUS)
    _sequence_agreement(counter, generators.convert_convention(minus), plus,
                        "convert_convention(minus)")
    _sequence_agreement(counter, generators.convert_convention(plus), minus,
                        "convert_convention(plus)")
    _sequence_agreement(counter, generators.gen_cesaro(upto), plus,
                        "cesaro")
    for k in range(0, upto + 1, 2):
        counter.equal(plus[k], minus[k], "even index {}".format(k))


def _builders(conv):
    yield from ((m.value, lambda p, m=m: powersum.build(p, conv, m))
                for m in powersum.BuildMethod)
    if conv is Convention.MINUS:
        yield 'integral', powersum.build_integral_form


def suite_powersum_agreement(counter, upto):
    for conv in Convention:
        for p in range(upto + 1):
            reference = powersum.build_closed_form(p, conv)
            for name, builder in _builders(conv):
                counter.equal(builder(p).polynomial, reference.polynomial,
                              "{} S_{} ({})".format(name, p, conv.value))
        fitted = powersum.prouhet_bernoulli(upto, conv)
        _sequence_agreement(counter, fitted,
                            generators.bernoulli_sequence(upto, conv),
                            "prouhet fit ({})".format(conv.value))


def suite_powersum_identities(counter, upto):
    n = RationalPolynomial.monomial(1)
    minus = [powersum.build_closed_form(p, Convention.MINUS).polynomial
             for p in range(upto + 1)]
    plus = [powersum.build_closed_form(p, Convention.PLUS).polynomial
            for p in range(upto + 1)]
    bern = generators.bernoulli_prefix(upto)
    for p in range(upto + 1):
        power = RationalPolynomial.monomial(p)
        zp = core.zero_power(0, p)
        counter.equal(minus[p].shift(1) - minus[p], power,
                      "S_{}(n+1) - S_{}(n)".format(p, p))
        counter.equal(plus[p].shift(1) - plus[p], power.shift(1),
                      "T_{}(n+1) - T_{}(n)".format(p, p))
        counter.equal(plus[p] - minus[p], power - zp,
                      "T_{} - S_{}".format(p, p))
        counter.equal([minus[p](v) for v in (1, 0, -1)],
                      [zp, 0, (-1) ** (p + 1)],
                      "S_{} at 1, 0, -1".format(p))
        counter.equal([plus[p](v) for v in (1, 0, -1)], [1, 0, -zp],
                      "T_{} at 1, 0, -1".format(p))
        # binom(x - 1, p) with x^k -> T_k(n) is binom(n, p + 1).
        counter.equal(
            umbral.substitute_power_sums(
                umbral.falling_binomial(-1, p), plus),
            RationalPolynomial(umbral.falling_binomial(0, p + 1)
                               .coefficients),
            "binom(T - 1, {})".format(p))
        pascal = sum((minus[k].scale(core.binomial(p + 1, k))
                      for k in range(p + 1)), RationalPolynomial())
        counter.equal(pascal, RationalPolynomial.monomial(p + 1),
                      "Pascal row {}".format(p))
        bpoly = powersum.bernoulli_polynomial(p)
        counter.equal(bpoly.reflect().shift(-1),
                      bpoly.scale((-1) ** p), "B_{}(1 - x)".format(p))
        if p == 0:
            continue
        counter.equal(minus[p].derivative(),
                      minus[p - 1].scale(p) + bern[p],
                      "S_{}'".format(p))
        _, rem = plus[p].divmod(n * (n + 1))
        counter.true(rem.is_zero(), "n(n+1) does not divide T_{}".format(p))
        for conv, poly in ((Convention.MINUS, minus[p]),
                           (Convention.PLUS, plus[p])):
            report = powersum.parity_decompose(
                powersum.PowerSumPolynomial.from_polynomial(p, conv, poly))
            counter.true(report.holds, "parity of {} p={} broken at {}"
                         .format(conv.value, p, report.wrong_parity))
        for value in range(-50, 51, 7):
            counter.equal(minus[p](value).denominator, 1,
                          "S_{}({}) denominator".format(p, value))


def suite_powersum_oracle(counter, upto):
    top = min(upto, ORACLE_MAX_POWER)
    for conv in Convention:
        for p in range(top + 1):
            polys = [builder(p) for _, builder in _builders(conv)]
            for value in range(ORACLE_MAX_N + 1):
                expected = powersum.brute_force_sum(p, value, conv)
                for poly in polys:
                    counter.equal(
                        powersum.evaluate(poly, value), expected,
                        "{} S_{}({}) ({})".format(poly.method, p, value,
                                                  conv.value))


def suite_umbral_identities(counter, upto):
    minus = generators.bernoulli_sequence(upto + 1).as_indexed()
    plus = generators.bernoulli_sequence(upto, Convention.PLUS).as_indexed()
    for p in range(upto + 1):
        counter.equal(
            umbral.downgrade(umbral.shift_power(1, p + 1), minus)
            - minus[p + 1], core.zero_power(0, p),
            "(B + 1)^{} - B_{}".format(p + 1, p + 1))
        counter.equal(umbral.downgrade(umbral.shift_power(1, p), minus),
                      (-1) ** p * minus[p], "(B + 1)^{}".format(p))
        counter.equal(umbral.downgrade(umbral.falling_binomial(0, p), minus),
                      ExactRational((-1) ** p, p + 1),
                      "binom(B, {})".format(p))
        counter.equal(umbral.downgrade(umbral.falling_binomial(-1, p), plus),
                      ExactRational((-1) ** p, p + 1),
                      "binom(B+ - 1, {})".format(p))
        if p >= 1:
            counter.equal(
                umbral.downgrade(umbral.falling_binomial(p - 1, p), minus),
                ExactRational(-1, p * (p + 1)),
                "binom(B + {}, {})".format(p - 1, p))
            counter.equal(
                umbral.bivariate_downgrade_polynomial(p, minus).derivative(),
                umbral.bivariate_downgrade_polynomial(p - 1, minus).scale(p),
                "d/dx (B + x)^{}".format(p))


SUITES = {
    'generators.agreement': suite_generator_agreement,
    'generators.convention': suite_generator_convention,
    'generators.invariants': suite_generator_invariants,
    'powersum.agreement': suite_powersum_agreement,
    'powersum.identities': suite_powersum_identities,
    'powersum.oracle': suite_powersum_oracle,
    'umbral.identities': suite_umbral_identities,
}


def run_suite(name, upto):
    counter = _Counter()
    try:
        SUITES[name](counter, upto)
    except (_Mismatch, ValueError) as e:
        logger.warning("suite %s failed: %s", name, e)
        return SuiteResult(name, False, counter.checked, str(e))
    logger.info("suite %s passed %d checks", name, counter.checked)
    return SuiteResult(name, True, counter.checked)


def _run_analytic(tolerance):
    reports = analytic.run_default_grid(tolerance)
    failed = [r for r in reports if not r.passed]
    detail = ''
    if failed:
        first = failed[0]
        detail = "{}: numeric {!r} vs reference {!r} (error {:.3g})".format(
            first.identity, first.numeric_value, first.reference,
            first.error)
    return SuiteResult('analytic.grid', not failed, len(reports), detail)


def run_suites(upto, workers=1, include_analytic=False, tolerance=None,
               names=None):
    """
    Run the named suites (all by default) across ``workers`` threads and
    return the results ordered by suite name.
    """
    upto = core.check_natural(upto, 'upto')
    if workers < 1:
        raise ValueError("workers must be positive, got {}".format(workers))
    names = sorted(SUITES if names is None else names)
    # Fill the cache once before the threads read it.
    generators.bernoulli_prefix(upto + 1)
    generators.bernoulli_prefix(upto + 1, Convention.PLUS)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(run_suite, name, upto) for name in names]
        if include_analytic:
            futures.append(executor.submit(_run_analytic, tolerance))
        results = [f.result() for f in futures]
    return sorted(results, key=lambda r: r.name)

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
