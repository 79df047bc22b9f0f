# -*- coding: utf-8 -*-
import io
import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from ...protocols.qrac import QracStrategy
from ..models import SeesawRun


class TestSeesawCommand(TestCase):

    def test_run_save_and_dump(self):
        directory = tempfile.mkdtemp()
        path = os.path.join(directory, 'best.json')
        out = io.StringIO()
        call_command(
            'seesaw', 'run', '--task', '5', '--restarts', '2', '--max-cycles', '3', '--save', '--dump', path,
            '--format', 'json', stdout=out,
            )
        row = json.loads(out.getvalue())[0]
        self.assertEqual(row['restarts'], 2)
        self.assertEqual(SeesawRun.objects.count(), 1)
        with open(path) as f:
            strategy = QracStrategy.from_json(json.load(f))
        self.assertEqual(len(strategy.states), 4)
        os.remove(path)
        os.rmdir(directory)

    def test_same_seed_same_output(self):
        outputs = []
        for _ in range(2):
            out = io.StringIO()
            call_command('seesaw', 'run', '--task', '2', '--restarts', '1', '--max-cycles', '3', '--seed', '7',
                         '--format', 'csv', stdout=out)
            outputs.append(out.getvalue())
        self.assertEqual(outputs[0], outputs[1])

    def test_appendix(self):
        out = io.StringIO()
        call_command('seesaw', 'appendix', stdout=out)
        self.assertIn('family', out.getvalue())
        self.assertIn('product', out.getvalue())

    def test_invalid_restarts(self):
        with self.assertRaises(CommandError) as context:
            call_command('seesaw', 'run', '--restarts', '-1', stdout=io.StringIO())
        self.assertEqual(context.exception.returncode, 2)
