# -*- coding: utf-8 -*-
import csv
import io

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ..nsbl import Q_STAR


class TestBellCommand(SimpleTestCase):

    def test_scan_csv(self):
        out = io.StringIO()
        call_command('bell', 'scan', '--t', '0', '--qmax', '0.1', '--steps', '2', '--format', 'csv', stdout=out)
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        self.assertEqual(len(rows), 3)
        self.assertEqual(list(rows[0]), ['t', 'q', 'local', 'nsbl_AB', 'nsbl_AC', 'nsbl_BC', 'quantum'])
        self.assertAlmostEqual(float(rows[0]['nsbl_BC']), 5 / 6, delta=1e-8)

    def test_gmn(self):
        out = io.StringIO()
        call_command('bell', 'gmn', '--qmin', '0.12', '--qmax', '0.12', '--steps', '0', stdout=out)
        self.assertIn('yes', out.getvalue())

    def test_threshold(self):
        out = io.StringIO()
        call_command('bell', 'threshold', '--format', 'csv', stdout=out)
        row = next(csv.DictReader(io.StringIO(out.getvalue())))
        self.assertAlmostEqual(float(row['q_star']), Q_STAR, delta=1e-6)

    def test_q_out_of_range(self):
        with self.assertRaises(CommandError) as context:
            call_command('bell', 'scan', '--qmax', '0.5', '--steps', '1', stdout=io.StringIO())
        self.assertEqual(context.exception.returncode, 2)
