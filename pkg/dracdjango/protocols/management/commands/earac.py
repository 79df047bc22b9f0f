# -*- coding: utf-8 -*-
import math

from ....racs.constructions import build_earac_task, optimal_resource
from ....racs.exceptions import InvalidTask
from ....racs.guessing import load_task
from ....reports.base import ReportCommand
from ....reports.formatters import render
from ...earac import EaracStrategy, eval_earac


class Command(ReportCommand):
    help = """Exact success probability of the GHZ assisted strategy of a reflection family."""
    actions = ('eval',)

    def add_command_arguments(self, parser):
        parser.add_argument('--task', default='1', help='Built-in index 1-8 or the path of a task JSON file.')
        parser.add_argument('--t', type=int, choices=(0, 1))
        parser.add_argument('--q', type=float)
        parser.add_argument('--reflection', choices=('XY', 'XZ', 'YZ'))
        parser.add_argument('--phi-prime', type=float, default=0.0, help='Phase rotation in units of π.')
        parser.add_argument(
            '--alice-offset', type=float, default=0.0, help='Constant added to the first angle, in units of π.'
            )
        parser.add_argument('--flip', action='store_true', help='Invert the final answer.')

    def run(self, config, options):
        task = load_task(config.task, config.bias)
        if options['reflection'] is None and config.task in ('1', '2', '3', '4') and not options['flip']:
            strategy = optimal_resource(int(config.task))[1]
        else:
            strategy = EaracStrategy(
                reflection=options['reflection'] or 'XY',
                phi_prime=options['phi_prime'] * math.pi,
                alice_phase_offset=options['alice_offset'] * math.pi,
                decoder_flip=int(options['flip']),
                )
        try:
            family = build_earac_task(strategy.reflection, strategy.phi_prime)[0].label
        except InvalidTask:
            family = ''
        row = {
            'task': task.label,
            'reflection': strategy.reflection,
            'phi_prime': strategy.phi_prime,
            'value': eval_earac(strategy, task),
            'family_task': family,
            }
        return render([row], ('task', 'reflection', 'phi_prime', 'value', 'family_task'), config.fmt)
