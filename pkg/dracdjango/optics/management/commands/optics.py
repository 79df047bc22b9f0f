# -*- coding: utf-8 -*-
from ....reports.base import ReportCommand
from ....reports.formatters import render
from ...comparison import AVERAGE_COLUMNS, COMPARE_COLUMNS, compare_averages, compare_report
from ...data import ingest_averages, ingest_results, load_setup_table
from ...design import MEASUREMENT_PLATES, verify_measurement, verify_setup


class Command(ReportCommand):
    help = """Check the wave plate settings and compare measured probabilities with the ideal ones.

    verify   preparation fidelities and Bob's unitaries for every row of the setup table
    compare  measured success probabilities against the ideal strategy, in sigma units
    """
    actions = ('verify', 'compare')

    def add_command_arguments(self, parser):
        parser.add_argument('--setup', help='Setup table CSV, defaults to the bundled one.')
        parser.add_argument(
            '--measurements', action='store_true', help="Check Charlie's analyzer plates instead of the setup table."
            )
        parser.add_argument('--results', help='Measured probabilities CSV, defaults to the bundled one.')
        parser.add_argument('--averages', action='store_true', help='Compare the per task averages instead.')

    def run(self, config, options):
        if config.action == 'verify':
            if options['measurements']:
                return self.measurements(config)
            rows = verify_setup(load_setup_table(options['setup']))
            return render(rows, ('task', 'state', 'unitary', 'fidelity', 'distance', 'passed'), config.fmt)

        if options['averages']:
            rows, summary = compare_averages(ingest_averages(options['results']), table=ingest_results())
            columns = AVERAGE_COLUMNS
        else:
            rows, summary = compare_report(ingest_results(options['results']))
            columns = COMPARE_COLUMNS
        rows.append(dict(summary, task='mean'))
        return render(rows, columns, config.fmt)

    def measurements(self, config):
        rows = []
        for basis in MEASUREMENT_PLATES:
            check = verify_measurement(basis)
            rows.append({
                'basis': basis, 'aligned': check.aligned, 'transmitted': check.transmitted,
                'axis': '({:.6f}, {:.6f}, {:.6f})'.format(*check.axis),
                })
        return render(rows, ('basis', 'aligned', 'transmitted', 'axis'), config.fmt)
