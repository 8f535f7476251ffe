# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


"""
Timing of the exact generators and power-sum builders.

:py:class:`CallProfiler` keeps a call tree of named probes; its
:py:meth:`CallProfiler.result` is a nested dict with ``name``,
``total_time`` (milliseconds), ``count`` and ``children``.
"""


import time
import logging
import functools
import contextlib
import threading

from . import core
from . import generators
from . import powersum
from .generators import Convention

__all__ = [
    'CallProfiler',
    'call_profiler',
    'profile_function',
    'run_bench',
]


logger = logging.getLogger(__name__)


class _Node:

    def __init__(self, name, parent=None):
        self.name = name
        self.parent = parent
        self.total_time = 0.0
        self.count = 0
        self.children = {}

    def child(self, name):
        if name not in self.children:
            self.children[name] = _Node(name, self)
        return self.children[name]

    def to_dict(self, current):
        out = {
            'name': self.name,
            'total_time': self.total_time,
            'count': self.count,
            'children': [c.to_dict(current)
                         for c in self.children.values()],
        }
        if self is current:
            out['current_node'] = True
        return out


class CallProfiler:
    """Call-tree profiler; nested probes become child nodes."""

    def __init__(self):
        self._lock = threading.Lock()
        self.reset()

    def reset(self):
        with self._lock:
            self._root = _Node('root')
            self._current = self._root

    @contextlib.contextmanager
    def probe(self, name):
        with self._lock:
            node = self._current.child(name)
            self._current = node
        start = time.perf_counter()
        try:
            yield node
        finally:
            elapsed = (time.perf_counter() - start) * 1000.0
            with self._lock:
                node.total_time += elapsed
                node.count += 1
                self._current = node.parent

    def result(self):
        with self._lock:
            if not self._root.children:
                return {}
            return self._root.to_dict(self._current)


call_profiler = CallProfiler()


def profile_function(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        with call_profiler.probe(func.__name__):
            return func(*args, **kwargs)
    return wrapper


def _numerator_bits(values):
    return max((core.as_rational(v).numerator.bit_length() for v in values),
               default=0)


def _bench_generator(name, upto, conv):
    generators.clear_cache()
    with call_profiler.probe('gen.' + name) as node:
        seq = generators.ALL_METHODS[name](upto, conv)
    return {
        'kind': 'generator',
        'method': name,
        'upto': upto,
        'seconds': node.total_time / 1000.0,
        'max_numerator_bits': _numerator_bits(seq.values),
    }


def _bench_builder(method, upto, conv):
    generators.clear_cache()
    bits = 0
    with call_profiler.probe('powersum.' + method.value) as node:
        for p in range(upto + 1):
            poly = powersum.build(p, conv, method)
            bits = max(bits, _numerator_bits(poly.coefficients))
    return {
        'kind': 'powersum',
        'method': method.value,
        'upto': upto,
        'seconds': node.total_time / 1000.0,
        'max_numerator_bits': bits,
    }


def run_bench(upto, methods=None, conv=Convention.MINUS):
    """
    One row per generator method and per power-sum build method.  Each
    timing starts from an empty Bernoulli cache.  ``methods`` restricts the
    rows to the named generator or build methods.
    """
    upto = core.check_natural(upto, 'upto')
    gen_names = sorted(generators.ALL_METHODS)
    builders = list(powersum.BuildMethod)
    if methods is not None:
        unknown = set(methods) - set(gen_names) - {m.value for m in builders}
        if unknown:
            raise ValueError("unknown bench methods: {}".format(
                ', '.join(sorted(unknown))))
        gen_names = [n for n in gen_names if n in methods]
        builders = [m for m in builders if m.value in methods]
    call_profiler.reset()
    rows = [_bench_generator(n, upto, conv) for n in gen_names]
    rows.extend(_bench_builder(m, upto, conv) for m in builders)
    logger.info("bench upto=%d: %d rows", upto, len(rows))
    return rows

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
