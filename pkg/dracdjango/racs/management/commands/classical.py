# -*- coding: utf-8 -*-
from ....reports.base import ReportCommand
from ....reports.formatters import render
from ...classical import classical_optimum, standard_rac_classical_optimum
from ...guessing import load_task


class Command(ReportCommand):
    help = """Exact classical optimum of a task by exhaustive search over deterministic strategies."""

    def add_command_arguments(self, parser):
        parser.add_argument('--task', default='1', help='Built-in index 1-8 or the path of a task JSON file.')
        parser.add_argument('--t', type=int, choices=(0, 1))
        parser.add_argument('--q', type=float)
        parser.add_argument('--parallel', action='store_true', help='Split the search into Celery tasks.')
        parser.add_argument('--standard', action='store_true', help='Use the non distributed 3→1 RAC instead.')

    def run(self, config, options):
        task = load_task(config.task, config.bias)
        if options['standard']:
            value = standard_rac_classical_optimum(task)
            row = {'task': task.label, 'scenario': 'standard', 'value': value, 'decimal': float(value)}
            return render([row], ('task', 'scenario', 'value', 'decimal'), config.fmt)
        value, witness = classical_optimum(task, parallel=options['parallel'])
        encoder, relay, decoder = witness.codes
        row = {
            'task': task.label, 'scenario': 'distributed', 'value': value, 'decimal': float(value),
            'encoder': encoder, 'relay': relay, 'decoder': decoder,
            }
        columns = ('task', 'scenario', 'value', 'decimal', 'encoder', 'relay', 'decoder')
        return render([row], columns, config.fmt)
