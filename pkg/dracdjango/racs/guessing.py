# -*- coding: utf-8 -*-
"""Guessing tasks of the 3→1 distributed random access code.

A task lists the bit the receiver should output for every input
``x = (x0, x1, x2)`` and question ``y ∈ {0, 1, 2}``. Truth tables are
indexed with ``x`` major and ``y`` minor, i.e. entry ``3·(4x0 + 2x1 + x2) + y``.
"""
import itertools
import json
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..numerics.linalg import projector
from .exceptions import InvalidTask, ProbabilityOutOfRange, QOutOfRange, UnknownTask

INPUTS = tuple(itertools.product((0, 1), repeat=3))
QUESTIONS = (0, 1, 2)
TABLE_SIZE = 24
Q_MAX = 1 / 6
# Qubit optimum, every answer right with probability cos²(θ/2) for a cube vertex.
P_QUANTUM = (1 + 1 / math.sqrt(3)) / 2


@dataclass(frozen=True)
class Bias:
    """Question weights ``(1/3 + q, 1/3 + (−2)^t q, 1/3 + (−2)^(1−t) q)``."""
    t: int
    q: float

    def __post_init__(self):
        if self.t not in (0, 1):
            raise QOutOfRange('t must be 0 or 1, got {!r}.'.format(self.t))
        if not 0 <= self.q <= Q_MAX + 1e-12:
            raise QOutOfRange('q must lie in [0, 1/6], got {!r}.'.format(self.q))

    @property
    def weights(self):
        return (
            1 / 3 + self.q,
            1 / 3 + (-2) ** self.t * self.q,
            1 / 3 + (-2) ** (1 - self.t) * self.q,
            )


def table_index(x0, x1, x2, y):
    return 3 * (4 * x0 + 2 * x1 + x2) + y


@dataclass(frozen=True)
class TaskSpec:
    truth_table: Tuple[int, ...]
    label: str = ''
    bias: Optional[Bias] = None

    def __post_init__(self):
        table = tuple(int(bit) for bit in self.truth_table)
        if len(table) != TABLE_SIZE:
            raise InvalidTask('A truth table has 24 entries, got {}.'.format(len(table)))
        if any(bit not in (0, 1) for bit in table):
            raise InvalidTask('Truth table entries must be bits.')
        object.__setattr__(self, 'truth_table', table)

    @classmethod
    def from_function(cls, function, label='', bias=None):
        """Build a task from ``function(x0, x1, x2) -> (f(x,0), f(x,1), f(x,2))``."""
        table = []
        for x in INPUTS:
            table.extend(int(bit) & 1 for bit in function(*x))
        return cls(tuple(table), label, bias)

    @classmethod
    def from_code(cls, code, label='', bias=None):
        if not 0 <= code < 2 ** TABLE_SIZE:
            raise InvalidTask('Task code {} does not fit in 24 bits.'.format(code))
        bits = format(code, '024b')
        return cls(tuple(int(b) for b in bits), label, bias)

    @classmethod
    def from_json(cls, data):
        table = data.get('truth_table')
        if table is None:
            raise InvalidTask('Task file has no truth_table.')
        bias = data.get('bias')
        if bias is not None:
            bias = Bias(int(bias['t']), float(bias['q']))
        label = data.get('label', '')
        if isinstance(table, int):
            return cls.from_code(table, label, bias)
        return cls(tuple(table), label, bias)

    def to_json(self):
        data = {'label': self.label, 'truth_table': list(self.truth_table), 'code': self.code}
        if self.bias is not None:
            data['bias'] = {'t': self.bias.t, 'q': self.bias.q}
        return data

    def with_bias(self, bias):
        return TaskSpec(self.truth_table, self.label, bias)

    @property
    def code(self):
        return int(''.join(str(b) for b in self.truth_table), 2)

    @property
    def weights(self):
        if self.bias is None:
            return (1 / 3, 1 / 3, 1 / 3)
        return self.bias.weights

    def f(self, x0, x1, x2, y):
        return self.truth_table[table_index(x0, x1, x2, y)]

    def table(self):
        """Truth table as an array indexed ``[x0, x1, x2, y]``."""
        return np.array(self.truth_table, dtype=int).reshape(2, 2, 2, 3)

    def column(self, y):
        return tuple(self.f(*x, y) for x in INPUTS)

    def columns_independent(self):
        """Whether f(·,y) and f(·,y′) are independent bits for uniform x, for every y ≠ y′."""
        for y, other in itertools.combinations(QUESTIONS, 2):
            first, second = self.column(y), self.column(other)
            for a, b in itertools.product((0, 1), repeat=2):
                joint = sum(1 for u, v in zip(first, second) if (u, v) == (a, b))
                if joint * 8 != first.count(a) * second.count(b):
                    return False
        return True


TABLE_ONE = (
    ('x0, x1, x2', lambda x0, x1, x2: (x0, x1, x2)),
    ('x0+x2, x1+x2, x2', lambda x0, x1, x2: (x0 ^ x2, x1 ^ x2, x2)),
    ('x0+x2(x0+x1), x1+x2(1+x0+x1), x2',
     lambda x0, x1, x2: (x0 ^ (x2 & (x0 ^ x1)), x1 ^ (x2 & (1 ^ x0 ^ x1)), x2)),
    ('x0+x2(1+x0+x1), x1+x2(x0+x1), x2',
     lambda x0, x1, x2: (x0 ^ (x2 & (1 ^ x0 ^ x1)), x1 ^ (x2 & (x0 ^ x1)), x2)),
    ('x0+x2, x1, x2', lambda x0, x1, x2: (x0 ^ x2, x1, x2)),
    ('x0, x1, x2+x0', lambda x0, x1, x2: (x0, x1, x2 ^ x0)),
    ('x0+x2, x1, x0', lambda x0, x1, x2: (x0 ^ x2, x1, x0)),
    ('x0+x2, x1+x2, x0', lambda x0, x1, x2: (x0 ^ x2, x1 ^ x2, x0)),
    )


def table_one():
    """The eight tasks of the reference table, ``+`` standing for XOR."""
    return tuple(TaskSpec.from_function(function, label) for label, function in TABLE_ONE)


def builtin_task(index):
    if not 1 <= index <= len(TABLE_ONE):
        raise UnknownTask('Built-in tasks are numbered 1 to 8, got {}.'.format(index))
    label, function = TABLE_ONE[index - 1]
    return TaskSpec.from_function(function, label)


def load_task(selector, bias=None):
    """Resolve a built-in index (``'1'``…``'8'``) or the path of a task JSON file."""
    selector = str(selector)
    if selector.isdigit():
        task = builtin_task(int(selector))
    else:
        try:
            with open(selector) as f:
                task = TaskSpec.from_json(json.load(f))
        except (OSError, ValueError) as e:
            raise UnknownTask('Could not read task file {}: {}'.format(selector, e))
    if bias is not None:
        task = task.with_bias(bias)
    return task


def encoding_angles(x0, x1, x2):
    """Polar and azimuthal angles of the prepared state for input x."""
    theta = math.acos(math.sqrt((math.sqrt(3) + (-1) ** x2) / (2 * math.sqrt(3))))
    phi = math.pi / 4 * (1 + 4 * x0 + 2 * (x0 ^ x1))
    return theta, phi


def encoding_ket(x0, x1, x2):
    theta, phi = encoding_angles(x0, x1, x2)
    return np.array([math.cos(theta), np.exp(1j * phi) * math.sin(theta)])


def encoding_state(x0, x1, x2):
    """Pure state on the cube vertex ``((−1)^x1, (−1)^x0, (−1)^x2)/√3``."""
    return projector(encoding_ket(x0, x1, x2))


def average_success(task, success):
    """Weighted success probability of a strategy on ``task``.

    ``success`` gives the probability of answering ``f(x, y)`` correctly,
    either as an array indexed ``[x0, x1, x2, y]`` or as a callable.
    """
    if callable(success):
        table = np.array([[success(*x, y) for y in QUESTIONS] for x in INPUTS], dtype=float)
    else:
        table = np.asarray(success, dtype=float)
    table = table.reshape(8, 3)
    if np.any(table < -1e-12) or np.any(table > 1 + 1e-12):
        raise ProbabilityOutOfRange('Success probabilities must lie in [0, 1].')
    return float(np.dot(table.mean(axis=0), task.weights))
