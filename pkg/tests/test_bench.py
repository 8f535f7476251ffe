# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


import os
import json
import time
import unittest

import jsonschema

from bernlab import bench
from bernlab import generators
from bernlab import powersum


def load_schema(name):
    path = os.path.join(os.path.abspath(os.path.dirname(__file__)),
                        "data", name)
    with open(path, 'r') as schema_file:
        return json.load(schema_file)


# duration (seconds)
def busy_loop(duration):
    end_time = time.perf_counter() + duration
    while time.perf_counter() < end_time:
        pass


class CallProfilerTC(unittest.TestCase):

    def setUp(self):
        self.profiler = bench.CallProfiler()

    def test_reset(self):
        with self.profiler.probe('foo'):
            busy_loop(0.001)
        self.profiler.reset()
        self.assertEqual(self.profiler.result(), {})

    def test_nested(self):
        with self.profiler.probe('foo'):
            busy_loop(0.01)
            with self.profiler.probe('bar'):
                busy_loop(0.05)
        with self.profiler.probe('foo'):
            pass
        root = self.profiler.result()
        self.assertEqual(len(root["children"]), 1)
        foo = root["children"][0]
        self.assertEqual(foo["name"], "foo")
        self.assertEqual(foo["count"], 2)
        self.assertGreaterEqual(foo["total_time"], 60)
        bar = foo["children"][0]
        self.assertEqual(bar["name"], "bar")
        self.assertEqual(bar["count"], 1)
        self.assertGreaterEqual(bar["total_time"], 50)
        self.assertEqual(bar["children"], [])

    def test_current_node(self):
        with self.profiler.probe('foo'):
            foo = self.profiler.result()["children"][0]
            self.assertTrue(foo["current_node"])
            self.assertEqual(foo["count"], 0)
        foo = self.profiler.result()["children"][0]
        self.assertNotIn("current_node", foo)

    def test_decorator(self):

        @bench.profile_function
        def foo():
            busy_loop(0.01)

        bench.call_profiler.reset()
        foo()
        root = bench.call_profiler.result()
        self.assertEqual(root["children"][0]["name"], "foo")
        try:
            jsonschema.validate(instance=root,
                                schema=load_schema("profiler_schema.json"))
        except jsonschema.ValidationError as e:
            self.fail(f"JSON data is invalid: {e.message}")


class RunBenchTC(unittest.TestCase):

    def tearDown(self):
        generators.clear_cache()

    def test_rows(self):
        rows = bench.run_bench(12)
        generator_rows = [r for r in rows if r['kind'] == 'generator']
        builder_rows = [r for r in rows if r['kind'] == 'powersum']
        self.assertEqual([r['method'] for r in generator_rows],
                         sorted(generators.ALL_METHODS))
        self.assertEqual(len(builder_rows), len(powersum.BuildMethod))
        for row in rows:
            self.assertEqual(row['upto'], 12)
            self.assertGreaterEqual(row['seconds'], 0.0)
        # B_12 = -691/2730
        self.assertEqual(generator_rows[0]['max_numerator_bits'],
                         (691).bit_length())
        try:
            jsonschema.validate(instance=rows,
                                schema=load_schema("bench_rows_schema.json"))
        except jsonschema.ValidationError as e:
            self.fail(f"JSON data is invalid: {e.message}")

    def test_zero(self):
        rows = bench.run_bench(0)
        for row in rows:
            self.assertEqual(row['max_numerator_bits'], 1)

    def test_methods_filter(self):
        rows = bench.run_bench(5, methods=['egf', 'pascal'])
        self.assertEqual([(r['kind'], r['method']) for r in rows],
                         [('generator', 'egf'), ('powersum', 'pascal')])
        with self.assertRaisesRegex(ValueError, "nosuch"):
            bench.run_bench(5, methods=['nosuch'])

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
