# -*- coding: utf-8 -*-
import json
import logging

from ....racs.guessing import load_task
from ....reports.base import ReportCommand
from ....reports.formatters import render
from ...appendix import task1_sign_report, task3_state_readings
from ...models import SeesawRun
from ...optimizer import run_seesaw

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = """See-saw lower bound on the qubit value of a task.

    run       alternate measurement, state and channel optimization from seeded restarts
    appendix  compare the readings of the ambiguous explicit strategies
    """
    actions = ('run', 'appendix')

    def add_command_arguments(self, parser):
        parser.add_argument('--task', default='1', help='Built-in index 1-8 or the path of a task JSON file.')
        parser.add_argument('--t', type=int, choices=(0, 1))
        parser.add_argument('--q', type=float)
        parser.add_argument('--restarts', type=int)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--max-cycles', type=int)
        parser.add_argument('--parallel', action='store_true', help='Run the restarts as Celery tasks.')
        parser.add_argument('--save', action='store_true', help='Store the best run in the database.')
        parser.add_argument('--dump', help='Write the best strategy as JSON to this file.')

    def run(self, config, options):
        if config.action == 'appendix':
            rows = [dict(row, matrix='task 1 channel') for row in task1_sign_report()]
            rows += [dict(row, matrix='task 3 state') for row in task3_state_readings()]
            return render(rows, ('matrix', 'reading', 'value', 'reaches_stated', 'norm'), config.fmt)

        task = load_task(config.task, config.bias)
        state = run_seesaw(
            task, config.restarts, config.seed, options['max_cycles'], parallel=options['parallel']
            )
        if options['dump']:
            with open(options['dump'], 'w') as f:
                json.dump(state.strategy.to_json(), f, indent=2)
                f.write('\n')
            logger.info('Best strategy written to %s', options['dump'])
        if options['save']:
            run = SeesawRun.from_state(state, task, config.restarts)
            run.save()
            logger.info('Saved %s', run)
        row = {
            'task': task.label, 'value': state.value, 'restarts': config.restarts, 'seed': config.seed,
            'best_restart': state.restart, 'cycles': state.cycles,
            }
        return render([row], ('task', 'value', 'restarts', 'seed', 'best_restart', 'cycles'), config.fmt)
