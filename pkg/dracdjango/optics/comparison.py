# -*- coding: utf-8 -*-
"""Measured against ideal success probabilities, in units of the quoted error."""
import logging
import math
import statistics

from ..protocols.qrac import success_table
from ..racs.exceptions import UnknownTask
from ..racs.guessing import P_QUANTUM, builtin_task
from .design import BASIS_QUESTIONS, IDENTITY_LABEL, intended_strategy, state_bits
from .exceptions import LabelMismatch

logger = logging.getLogger(__name__)

ACCEPTANCE_SIGMAS = 1.1
# An error bar this far below the median of its table is reported as a likely misprint.
TYPO_RATIO = 0.2

COMPARE_COLUMNS = ('task', 'state', 'unitary', 'basis', 'measured', 'sigma', 'ideal', 'deviation', 'within')
AVERAGE_COLUMNS = ('task', 'label', 'measured', 'sigma', 'ideal', 'deviation', 'within', 'suspected_typo', 'rows_mean')


def deviation(measured, ideal, sigma):
    """``(measured − ideal)/σ``; a zero σ gives 0 on agreement and ±∞ otherwise."""
    if sigma > 0:
        return (measured - ideal) / sigma
    if measured == ideal:
        return 0.0
    return math.copysign(math.inf, measured - ideal)


def _ideal_tables(tasks, ideal):
    tables = {}
    for index in tasks:
        if ideal is None:
            try:
                task, strategy = intended_strategy(index)
            except UnknownTask as e:
                raise LabelMismatch('; '.join(e.messages))
        elif index in ideal:
            task, strategy = ideal[index]
        else:
            raise LabelMismatch('No ideal strategy given for task {}.'.format(index))
        strategy.validate()
        tables[index] = (task, success_table(strategy, task))
    return tables


def compare_report(table, ideal=None):
    """Per row comparison of a measured table with the ideal strategies.

    ``ideal`` maps a task index to ``(TaskSpec, QracStrategy)`` and defaults
    to the strategies the optical setup is designed for. Returns the rows
    and a summary with the means over the table.
    """
    tables = _ideal_tables(table.tasks, ideal)
    rows = []
    for row in table.rows:
        task, success = tables[row.task]
        if row.unitary == IDENTITY_LABEL:
            x2 = 0
        elif row.unitary == task.label:
            x2 = 1
        else:
            raise LabelMismatch('Task {} uses {} or {}, not {!r}.'.format(
                row.task, IDENTITY_LABEL, task.label, row.unitary,
                ))
        x0, x1 = state_bits(row.state)
        expected = float(success[x0, x1, x2, BASIS_QUESTIONS[row.basis]])
        sigmas = deviation(row.p, expected, row.sigma)
        within = abs(sigmas) <= ACCEPTANCE_SIGMAS
        if not within:
            logger.info('Task %s %s %s %s is %.1f sigma off', row.task, row.state, row.unitary, row.basis, sigmas)
        rows.append({
            'task': row.task, 'state': row.state, 'unitary': row.unitary, 'basis': row.basis,
            'measured': row.p, 'sigma': row.sigma, 'ideal': expected, 'deviation': sigmas, 'within': within,
            })
    summary = _summary(rows)
    return rows, summary


def _summary(rows):
    if not rows:
        return {'rows': 0, 'within': 0, 'measured': None, 'ideal': None, 'deviation': None}
    return {
        'rows': len(rows),
        'within': sum(1 for row in rows if row['within']),
        'measured': statistics.fmean(row['measured'] for row in rows),
        'ideal': statistics.fmean(row['ideal'] for row in rows),
        'deviation': statistics.fmean(row['deviation'] for row in rows),
        }


def compare_averages(averages, ideal=P_QUANTUM, table=None):
    """Compare the published task averages with the ideal value.

    Error bars far smaller than their siblings are flagged, never corrected.
    With ``table`` the mean of its rows for each task is reported too.
    """
    median = statistics.median(row.sigma for row in averages) if averages else 0.0
    rows = []
    for row in averages:
        sigmas = deviation(row.p, ideal, row.sigma)
        rows.append({
            'task': row.task,
            'label': builtin_task(row.task).label,
            'measured': row.p,
            'sigma': row.sigma,
            'ideal': ideal,
            'deviation': sigmas,
            'within': abs(sigmas) <= ACCEPTANCE_SIGMAS,
            'suspected_typo': row.sigma < TYPO_RATIO * median,
            'rows_mean': table.mean(row.task) if table is not None else None,
            })
    return rows, _summary(rows)
