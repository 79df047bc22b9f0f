# -*- coding: utf-8 -*-
from ...base import ReportCommand
from ...formatters import render
from ...table1 import COLUMNS, cmd_table1


class Command(ReportCommand):
    help = """Summary reports.

    table1  classical, EARAC and qubit values of the eight reference tasks
    """
    actions = ('table1',)

    def add_command_arguments(self, parser):
        parser.add_argument('--restarts', type=int)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--max-cycles', type=int)
        parser.add_argument('--no-seesaw', action='store_true', help='Skip the see-saw column.')
        parser.add_argument('--parallel', action='store_true', help='Run the see-saw restarts as Celery tasks.')

    def run(self, config, options):
        rows = cmd_table1(
            config.restarts, config.seed, options['max_cycles'],
            seesaw=not options['no_seesaw'], parallel=options['parallel'],
            )
        return render(rows, COLUMNS, config.fmt)
