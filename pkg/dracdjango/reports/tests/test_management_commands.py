# -*- coding: utf-8 -*-
import csv
import io
import json

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ...racs.guessing import P_QUANTUM


class TestReportCommand(SimpleTestCase):

    def test_table1_without_seesaw(self):
        out = io.StringIO()
        call_command('report', 'table1', '--no-seesaw', '--format', 'csv', stdout=out)
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        self.assertEqual(len(rows), 8)
        self.assertEqual([row['classical'] for row in rows[4:]], ['17/24', '2/3', '2/3', '2/3'])
        self.assertEqual({row['reference_classical'] for row in rows}, {'2/3'})
        self.assertEqual(rows[4]['earac'], '0.7442')
        self.assertEqual(rows[4]['qrac_seesaw'], '')

    def test_table1_with_seesaw(self):
        out = io.StringIO()
        call_command(
            'report', 'table1', '--restarts', '1', '--max-cycles', '3', '--format', 'json', stdout=out,
            )
        for row in json.loads(out.getvalue()):
            self.assertLessEqual(row['qrac_seesaw'], P_QUANTUM + 1e-9)
            self.assertGreater(row['qrac_seesaw'], 0.5)

    def test_invalid_restarts(self):
        with self.assertRaises(CommandError) as context:
            call_command('report', 'table1', '--restarts', '0', stdout=io.StringIO())
        self.assertEqual(context.exception.returncode, 2)
