# -*- coding: utf-8 -*-
import json

from ....racs.constructions import build_qrac_task, optimal_resource
from ....racs.cube import find_rotation
from ....racs.guessing import load_task
from ....reports.base import ReportCommand
from ....reports.formatters import render
from ....seesaw.appendix import appendix_strategies
from ...exceptions import InvalidStrategy
from ...qrac import QracStrategy, eval_qrac_strategy, per_question_values


def resolve_strategy(options, config):
    if options['strategy']:
        try:
            with open(options['strategy']) as f:
                return QracStrategy.from_json(json.load(f))
        except (OSError, ValueError) as e:
            raise InvalidStrategy('Could not read strategy {}: {}'.format(options['strategy'], e))
    if options['rotation']:
        return build_qrac_task(find_rotation(options['rotation']))[1]
    index = int(config.task) if config.task.isdigit() else None
    if index in (5, 6, 7, 8):
        return optimal_resource(index)[1]
    if index in (1, 2, 3):
        return appendix_strategies(index)
    raise InvalidStrategy('No default qubit strategy for task {}, pass --strategy.'.format(config.task))


class Command(ReportCommand):
    help = """Exact success probability of a qubit strategy (prepare, transmit, measure)."""
    actions = ('eval',)

    def add_command_arguments(self, parser):
        parser.add_argument('--task', default='5', help='Built-in index 1-8 or the path of a task JSON file.')
        parser.add_argument('--t', type=int, choices=(0, 1))
        parser.add_argument('--q', type=float)
        parser.add_argument('--strategy', help='Strategy JSON file.')
        parser.add_argument('--rotation', help='Cube rotation label, e.g. "R_X(π)".')

    def run(self, config, options):
        task = load_task(config.task, config.bias)
        strategy = resolve_strategy(options, config)
        value = eval_qrac_strategy(strategy, task)
        questions = per_question_values(strategy, task)
        row = {'task': task.label, 'value': value}
        row.update({'y{}'.format(y): v for y, v in enumerate(questions)})
        return render([row], ('task', 'value', 'y0', 'y1', 'y2'), config.fmt)
