# -*- coding: utf-8 -*-
import csv
import io
import json

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


class TestOpticsCommand(SimpleTestCase):

    def call(self, *args):
        out = io.StringIO()
        call_command('optics', *args, stdout=out)
        return out.getvalue()

    def test_verify(self):
        rows = list(csv.DictReader(io.StringIO(self.call('verify', '--format', 'csv'))))
        self.assertEqual(len(rows), 17)
        self.assertEqual({row['passed'] for row in rows}, {'yes'})

    def test_verify_measurements(self):
        rows = json.loads(self.call('verify', '--measurements', '--format', 'json'))
        transmitted = {row['basis']: row['transmitted'] for row in rows}
        self.assertEqual(transmitted, {'Y': -1, 'X': 1, 'Z': 1})

    def test_compare(self):
        rows = json.loads(self.call('compare', '--format', 'json'))
        self.assertEqual(len(rows), 97)
        self.assertEqual(rows[-1]['task'], 'mean')
        self.assertEqual(rows[0]['basis'], 'Y')

    def test_compare_averages(self):
        rows = json.loads(self.call('compare', '--averages', '--format', 'json'))
        self.assertEqual(len(rows), 5)
        self.assertTrue(rows[2]['suspected_typo'])
        self.assertTrue(all(row['within'] for row in rows[:4]))

    def test_missing_results_file(self):
        with self.assertRaises(CommandError) as context:
            self.call('compare', '--results', '/nonexistent/measured.csv')
        self.assertEqual(context.exception.returncode, 2)
