# -*- coding: utf-8 -*-
from ....racs.guessing import Q_MAX
from ....reports.base import ReportCommand
from ....reports.formatters import render
from ...nsbl import Q_STAR, BellBounds, bell_scan, gmn_threshold, gmn_witness, q_grid


class Command(ReportCommand):
    help = """Local, no-signaling bilocal and quantum values of the biased Bell expression B(t, q).

    scan       bounds on a grid of q, for one or both values of t
    gmn        genuine tripartite nonlocality witness along the same grid
    threshold  the q above which the quantum value beats every bipartition
    """
    actions = ('scan', 'gmn', 'threshold')

    def add_command_arguments(self, parser):
        parser.add_argument('--t', type=int, choices=(0, 1), help='Restrict the scan to one bias direction.')
        parser.add_argument('--qmin', type=float, default=0.0)
        parser.add_argument('--qmax', type=float, default=Q_MAX)
        parser.add_argument('--steps', type=int, default=10)
        parser.add_argument('--parallel', action='store_true', help='Evaluate grid cells as Celery tasks.')

    def run(self, config, options):
        qs = q_grid(options['qmin'], options['qmax'], options['steps'])
        if config.action == 'threshold':
            row = {'q_star': gmn_threshold(), 'closed_form': Q_STAR}
            return render([row], ('q_star', 'closed_form'), config.fmt)
        if config.action == 'gmn':
            rows = [dict(gmn_witness(q)._asdict(), q=q) for q in qs]
            return render(rows, ('q', 't', 'quantum', 'bound', 'certified'), config.fmt)
        ts = (0, 1) if config.t is None else (config.t,)
        rows = [bounds._asdict() for bounds in bell_scan(ts, qs, parallel=options['parallel'])]
        return render(rows, BellBounds._fields, config.fmt)
