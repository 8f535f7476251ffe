# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Command-line front end: ``bernlab gen|powersum|verify|analytic|bench``.

Exit status is 0 on success, 1 when a verification or check fails and 2 on
usage errors.
"""


import io
import sys
import csv
import json
import logging
import argparse
from dataclasses import dataclass

from . import core
from . import umbral
from . import generators
from . import powersum
from . import analytic
from . import verify
from . import bench
from .generators import Convention
from .toggle import OutputFormat, Toggle


__all__ = [
    'EXIT_OK',
    'EXIT_FAILURE',
    'EXIT_USAGE',
    'RunConfig',
    'enter_main',
    'main',
]


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

POWERSUM_METHODS = [m.value for m in powersum.BuildMethod] + ['integral']
ANALYTIC_CHECKS = ['zeta', 'plana', 'glaisher', 'jensen', 'egf', 'abel',
                   'stirling']


class _ParserExit(Exception):
    pass


class BernlabArgumentParser(argparse.ArgumentParser):
    """
    Record the exit request and unwind instead of terminating the process.
    """

    def __init__(self, *args, **kw):
        super().__init__(*args, **kw)
        self.exited = False
        self.exited_status = None
        self.exited_message = None

    def exit(self, status=0, message=None):
        self.exited = True
        self.exited_status = status
        self.exited_message = message
        if message:
            sys.stderr.write(message)
        raise _ParserExit(status)


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one invocation."""

    command: str
    fmt: OutputFormat
    tolerance: object = None
    method: str = None
    convention: Convention = Convention.MINUS
    upto: int = 0
    power: int = 0
    point: int = None
    show_symbolic: bool = False
    workers: int = 1

    def __post_init__(self):
        for name in ('upto', 'power'):
            if getattr(self, name) < 0:
                raise ValueError("--{} must be nonnegative, got {}".format(
                    'p' if name == 'power' else name, getattr(self, name)))
        if self.tolerance is not None and not self.tolerance > 0:
            raise ValueError("--tol must be positive, got {}".format(
                self.tolerance))
        if self.workers < 1:
            raise ValueError("--workers must be positive, got {}".format(
                self.workers))

    @classmethod
    def from_args(cls, args, toggle):
        tolerance = getattr(args, 'tol', None)
        if tolerance is None:
            tolerance = toggle.tolerance
        return cls(
            command=args.command,
            fmt=OutputFormat(args.format or toggle.fmt.value),
            tolerance=tolerance,
            method=getattr(args, 'method', None),
            convention=Convention(getattr(args, 'convention', 'minus')),
            upto=getattr(args, 'upto', 0),
            power=getattr(args, 'p', 0),
            point=getattr(args, 'n', None),
            show_symbolic=getattr(args, 'show_symbolic', False),
            workers=getattr(args, 'workers', 1),
        )


def _make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='format', action='store',
                        default=None, choices=[f.value for f in OutputFormat],
                        help='output format (default = $BERNLAB_FORMAT or '
                             'plain)')
    common.add_argument('--log-level', dest='log_level', action='store',
                        default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='diagnostics on stderr (default = %(default)s)')

    parser = BernlabArgumentParser(
        prog='bernlab', description="Exact Bernoulli numbers and power sums")
    sub = parser.add_subparsers(dest='command', required=True)

    cmd = sub.add_parser('gen', parents=[common],
                         help='generate B_0..B_upto')
    cmd.add_argument('--method', default='de-moivre',
                     choices=sorted(generators.ALL_METHODS),
                     help='generator (default = %(default)s)')
    cmd.add_argument('--upto', type=int, default=10)
    cmd.add_argument('--convention', default='minus',
                     choices=[c.value for c in Convention])
    cmd.add_argument('--show-symbolic', dest='show_symbolic',
                     action='store_true',
                     help='also print (B + 1)^(p+1) - B^(p+1) expanded')

    cmd = sub.add_parser('powersum', parents=[common],
                         help='power-sum polynomial or its value')
    cmd.add_argument('--p', type=int, required=True)
    cmd.add_argument('--method', default='closed-form',
                     choices=POWERSUM_METHODS)
    cmd.add_argument('--convention', default='minus',
                     choices=[c.value for c in Convention])
    cmd.add_argument('--n', type=int, default=None,
                     help='evaluate at this point instead of printing')

    cmd = sub.add_parser('verify', parents=[common],
                         help='run the cross-method and identity suites')
    cmd.add_argument('--upto', type=int, default=20)
    cmd.add_argument('--workers', type=int, default=4)
    cmd.add_argument('--analytic', action='store_true',
                     help='add the floating-point check grid')
    cmd.add_argument('--tol', type=float, default=None)

    cmd = sub.add_parser('analytic', parents=[common],
                         help='one floating-point check')
    cmd.add_argument('--check', required=True, choices=ANALYTIC_CHECKS)
    cmd.add_argument('--n', type=int, default=1)
    cmd.add_argument('--x', type=float, default=1.0)
    cmd.add_argument('--terms', type=int, default=None)
    cmd.add_argument('--variant', default=None)
    cmd.add_argument('--panels', type=int, default=64)
    cmd.add_argument('--tol', type=float, default=None)

    cmd = sub.add_parser('bench', parents=[common],
                         help='time the exact methods')
    cmd.add_argument('--upto', type=int, default=40)
    cmd.add_argument('--methods', nargs='+', default=None)
    return parser


def _parse_command_line(argv):
    parser = _make_parser()
    try:
        args = parser.parse_args(argv[1:])
    except _ParserExit as e:
        args = argparse.Namespace(exit=(e.args[0], parser.exited_message))
    else:
        args.exit = tuple()
    return args


def _emit(text):
    sys.stdout.write(text)
    if not text.endswith('\n'):
        sys.stdout.write('\n')


def _emit_json(data):
    _emit(json.dumps(data, indent=2))


def _emit_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC,
                        lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    _emit(buf.getvalue())


def _symbolic_lines(upto):
    lines = []
    for p in range(upto + 1):
        form = (umbral.shift_power(1, p + 1)
                - umbral.UmbralPolynomial.monomial(p + 1))
        lines.append("(B + 1)^{0} - B^{0} = {1}".format(
            p + 1, form.to_text('B')))
    return lines


def cmd_gen(config):
    seq = generators.ALL_METHODS[config.method](config.upto,
                                                 config.convention)
    texts = [core.format_rational(v) for v in seq.values]
    if config.fmt is OutputFormat.JSON:
        data = seq.to_json()
        if config.show_symbolic:
            data['symbolic'] = _symbolic_lines(config.upto)
        _emit_json(data)
    elif config.fmt is OutputFormat.CSV:
        _emit_csv(['index', 'value'], list(enumerate(texts)))
    else:
        _emit(', '.join(texts))
        if config.show_symbolic:
            _emit('\n'.join(_symbolic_lines(config.upto)))
    return EXIT_OK


def _build_powersum(config):
    if config.method == 'integral':
        if config.convention is not Convention.MINUS:
            raise ValueError("the integral form builds S_p (minus) only")
        return powersum.build_integral_form(config.power)
    return powersum.build(config.power, config.convention, config.method)


def cmd_powersum(config):
    poly = _build_powersum(config)
    if config.point is None:
        if config.fmt is OutputFormat.JSON:
            _emit_json(poly.to_json())
        elif config.fmt is OutputFormat.CSV:
            _emit_csv(['power', 'coefficient'],
                      [(j, core.format_rational(c))
                       for j, c in enumerate(poly.coefficients)])
        else:
            _emit(poly.to_text())
        return EXIT_OK
    value = core.format_rational(powersum.evaluate(poly, config.point))
    if config.fmt is OutputFormat.JSON:
        _emit_json({'power': poly.power,
                    'convention': poly.convention.value,
                    'n': config.point, 'value': value})
    elif config.fmt is OutputFormat.CSV:
        _emit_csv(['power', 'n', 'value'],
                  [(poly.power, config.point, value)])
    else:
        _emit(value)
    return EXIT_OK


def cmd_verify(config, include_analytic=False):
    results = verify.run_suites(config.upto, workers=config.workers,
                                include_analytic=include_analytic,
                                tolerance=config.tolerance)
    if config.fmt is OutputFormat.JSON:
        _emit_json([r.to_json() for r in results])
    elif config.fmt is OutputFormat.CSV:
        _emit_csv(['suite', 'passed', 'checked', 'detail'],
                  [(r.name, 'PASS' if r.passed else 'FAIL', r.checked,
                    r.detail) for r in results])
    else:
        for r in results:
            line = "{} {} ({} checks)".format(
                'PASS' if r.passed else 'FAIL', r.name, r.checked)
            if r.detail:
                line += ": " + r.detail
            _emit(line)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE


def _run_check(args, tolerance):
    tol = {} if tolerance is None else {'tolerance': tolerance}
    variant = args.variant
    if args.check == 'zeta':
        return analytic.check_zeta_even(
            args.n, terms=args.terms or 100000, **tol)
    if args.check == 'plana':
        return analytic.check_plana(
            args.n, variant or 'expm1', panel_count=args.panels, **tol)
    if args.check == 'glaisher':
        return analytic.check_glaisher(args.n, variant or 'exp-minus', **tol)
    if args.check == 'jensen':
        return analytic.check_jensen(args.n, panel_count=args.panels, **tol)
    if args.check == 'egf':
        return analytic.check_cot_egf(
            args.x, terms=args.terms or 40, variant=variant or 'cos2bx',
            **tol)
    if args.check == 'abel':
        return analytic.check_abel_integral(
            args.x, terms=args.terms or 40, panel_count=args.panels, **tol)
    terms = 3 if args.terms is None else args.terms
    return analytic.stirling_log_factorial(args.n, terms)


def cmd_analytic(args, config):
    report = _run_check(args, config.tolerance)
    if config.fmt is OutputFormat.JSON:
        _emit_json(report.to_json())
    elif config.fmt is OutputFormat.CSV:
        data = report.to_json()
        _emit_csv(list(data), [[_csv_cell(v) for v in data.values()]])
    else:
        _emit("{} {}: numeric {!r}, reference {!r}, error {:.3g}, "
              "tolerance {:.3g}{}".format(
                  'PASS' if report.passed else 'FAIL', report.identity,
                  report.numeric_value, report.reference, report.error,
                  report.tolerance,
                  "; " + report.note if report.note else ''))
    return EXIT_OK if report.passed else EXIT_FAILURE


def _csv_cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return value


def cmd_bench(args, config):
    rows = bench.run_bench(config.upto, methods=args.methods)
    header = ['kind', 'method', 'upto', 'seconds', 'max_numerator_bits']
    if config.fmt is OutputFormat.JSON:
        _emit_json(rows)
    elif config.fmt is OutputFormat.CSV:
        _emit_csv(header, [[row[k] for k in header] for row in rows])
    else:
        for row in rows:
            _emit("{kind:10s} {method:15s} upto={upto:<4d} "
                  "{seconds:10.6f}s {max_numerator_bits:6d} bits"
                  .format(**row))
    return EXIT_OK


def _dispatch(args, config):
    if 'gen' == config.command:
        return cmd_gen(config)
    elif 'powersum' == config.command:
        return cmd_powersum(config)
    elif 'verify' == config.command:
        return cmd_verify(config, include_analytic=args.analytic)
    elif 'analytic' == config.command:
        return cmd_analytic(args, config)
    return cmd_bench(args, config)


def enter_main(argv):
    args = _parse_command_line(argv)
    if args.exit:
        return args.exit[0]
    logging.basicConfig(level=getattr(logging, args.log_level),
                        stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        toggle = Toggle.from_environ()
        config = RunConfig.from_args(args, toggle)
    except ValueError as e:
        sys.stderr.write("bernlab: error: {}\n".format(e))
        return EXIT_USAGE
    logger.debug("%s", toggle.report())
    try:
        return _dispatch(args, config)
    except (ValueError, TypeError, OverflowError) as e:
        sys.stderr.write("bernlab {}: error: {}\n".format(config.command, e))
        return EXIT_USAGE


def main():
    return enter_main(sys.argv)

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
