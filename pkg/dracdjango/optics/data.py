# -*- coding: utf-8 -*-
"""Bundled reference data: the setup table, measured probabilities and quoted constants.

Files live under ``settings.REFERENCE_DATA_DIR``; every loader also takes an
explicit path.
"""
import csv
import logging
import os
from dataclasses import dataclass
from typing import NamedTuple, Tuple

import yaml
from django.conf import settings

from .design import BASIS_QUESTIONS, PreparationSetting, SetupRow, UnitarySetting, state_bits
from .exceptions import LabelMismatch, ParseError, RangeError

logger = logging.getLogger(__name__)

SETUP_FILE = 'setup.csv'
MEASURED_FILE = 'measured.csv'
AVERAGES_FILE = 'averages.csv'
REFERENCES_FILE = 'references.yaml'

SETUP_COLUMNS = ('task', 'state', 'alpha', 'theta1', 'beta', 'theta2', 'unitary', 'theta3', 'gamma', 'theta4')
MEASURED_COLUMNS = ('task', 'state', 'unitary', 'basis', 'p', 'sigma')
AVERAGE_COLUMNS = ('task', 'p', 'sigma')


class MeasuredRow(NamedTuple):
    task: int
    state: str
    unitary: str
    basis: str
    p: float
    sigma: float


class AverageRow(NamedTuple):
    task: int
    p: float
    sigma: float


@dataclass(frozen=True)
class MeasuredTable:
    rows: Tuple[MeasuredRow, ...]

    def __len__(self):
        return len(self.rows)

    @property
    def tasks(self):
        return tuple(sorted({row.task for row in self.rows}))

    def for_task(self, task):
        return tuple(row for row in self.rows if row.task == task)

    def mean(self, task=None):
        rows = self.rows if task is None else self.for_task(task)
        if not rows:
            return None
        return sum(row.p for row in rows) / len(rows)


def reference_path(name):
    return os.path.join(settings.REFERENCE_DATA_DIR, name)


def check_probability(p, sigma):
    if not 0 <= p <= 1:
        raise RangeError('p = {} is not a probability.'.format(p))
    if not sigma >= 0:
        raise RangeError('sigma = {} must be non negative.'.format(sigma))


def _read_csv(path, columns, parse):
    try:
        f = open(path, newline='', encoding='utf-8')
    except OSError as e:
        raise ParseError('Could not read {}: {}'.format(path, e))
    rows = []
    with f:
        reader = csv.DictReader(f)
        missing = [c for c in columns if c not in (reader.fieldnames or ())]
        if missing:
            raise ParseError('{} line 1: missing columns {}.'.format(path, ', '.join(missing)))
        for record in reader:
            try:
                rows.append(parse({c: record[c].strip() for c in columns}))
            except (AttributeError, TypeError, ValueError) as e:
                raise ParseError('{} line {}: {}'.format(path, reader.line_num, e))
            except (LabelMismatch, RangeError) as e:
                raise type(e)('{} line {}: {}'.format(path, reader.line_num, '; '.join(e.messages)))
    logger.debug('Read %d rows from %s', len(rows), path)
    return rows


def _measured_row(record):
    row = MeasuredRow(
        int(record['task']), record['state'], record['unitary'], record['basis'].upper(),
        float(record['p']), float(record['sigma']),
        )
    state_bits(row.state)
    if row.basis not in BASIS_QUESTIONS:
        raise LabelMismatch('Unknown basis {!r}, expected Y, X or Z.'.format(row.basis))
    check_probability(row.p, row.sigma)
    return row


def _average_row(record):
    row = AverageRow(int(record['task']), float(record['p']), float(record['sigma']))
    check_probability(row.p, row.sigma)
    return row


def _setup_row(record):
    state_bits(record['state'])
    return SetupRow(
        int(record['task']),
        record['state'],
        PreparationSetting(*(float(record[c]) for c in ('alpha', 'theta1', 'beta', 'theta2'))),
        record['unitary'],
        UnitarySetting(*(float(record[c]) for c in ('theta3', 'gamma', 'theta4'))),
        )


def ingest_results(path=None):
    """Measured success probabilities, one row per state, unitary and basis."""
    return MeasuredTable(tuple(_read_csv(path or reference_path(MEASURED_FILE), MEASURED_COLUMNS, _measured_row)))


def ingest_averages(path=None):
    """Average success probability of each task as published."""
    return tuple(_read_csv(path or reference_path(AVERAGES_FILE), AVERAGE_COLUMNS, _average_row))


def load_setup_table(path=None):
    return tuple(_read_csv(path or reference_path(SETUP_FILE), SETUP_COLUMNS, _setup_row))


def load_references(path=None):
    path = path or reference_path(REFERENCES_FILE)
    try:
        with open(path, encoding='utf-8') as f:
            return yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise ParseError('Could not read {}: {}'.format(path, e))
