# -*- coding: utf-8 -*-
import io
import json
import math

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

P_QUANTUM = (1 + math.sqrt(3)) / (2 * math.sqrt(3))


def run_json(*args):
    out = io.StringIO()
    call_command(*args, '--format', 'json', stdout=out)
    return json.loads(out.getvalue())


class TestQracCommand(SimpleTestCase):

    def test_default_strategy(self):
        row = run_json('qrac', 'eval', '--task', '6')[0]
        self.assertAlmostEqual(float(row['value']), P_QUANTUM, delta=1e-9)

    def test_rotation(self):
        row = run_json('qrac', 'eval', '--task', '5', '--rotation', 'R_X(π)')[0]
        self.assertAlmostEqual(float(row['y2']), P_QUANTUM, delta=1e-9)

    def test_no_default_strategy(self):
        with self.assertRaises(CommandError) as context:
            call_command('qrac', 'eval', '--task', '4', stdout=io.StringIO())
        self.assertEqual(context.exception.returncode, 2)


class TestEaracCommand(SimpleTestCase):

    def test_default_strategy(self):
        row = run_json('earac', 'eval', '--task', '2')[0]
        self.assertAlmostEqual(float(row['value']), P_QUANTUM, delta=1e-9)
        self.assertEqual(row['family_task'], 'R_XY R_Z(π)')

    def test_flip(self):
        row = run_json('earac', 'eval', '--task', '1', '--flip')[0]
        self.assertAlmostEqual(float(row['value']), 1 - P_QUANTUM, delta=1e-9)
