# -*- coding: utf-8 -*-
from ....reports.base import ReportCommand
from ....reports.formatters import render, render_document
from ...guessing import load_task, table_one


class Command(ReportCommand):
    help = """List the built-in tasks or show the truth table of one task."""
    actions = ('list', 'show')

    def add_command_arguments(self, parser):
        parser.add_argument('--task', default='1', help='Built-in index 1-8 or the path of a task JSON file.')

    def run(self, config, options):
        if config.action == 'list':
            rows = [
                {'index': index, 'label': task.label, 'code': '{:06x}'.format(task.code),
                 'independent': task.columns_independent()}
                for index, task in enumerate(table_one(), start=1)
                ]
            return render(rows, ('index', 'label', 'code', 'independent'), config.fmt, 'Built-in tasks')
        task = load_task(config.task)
        document = task.to_json()
        document['independent'] = task.columns_independent()
        return render_document(document, config.fmt)
