# -*- coding: utf-8 -*-
"""Prepare, transmit and measure: the qubit version of the distributed RAC.

The first device prepares ``states[2·x0 + x1]``, the second one applies
``channels[x2]`` and the third one measures ``measurements[y]``, answering
with the outcome.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..channels.choi import ChoiMatrix, check_state, validate_choi
from ..channels.exceptions import InvalidState
from ..numerics.linalg import (
    ALGEBRAIC_TOL, IDENTITY, KET_0, KET_PLUS, KET_Y_PLUS, as_matrix, bloch_to_state, projector,
    state_to_bloch,
    )
from ..racs.cube import cube_vertex
from ..racs.guessing import INPUTS, QUESTIONS, average_success
from .exceptions import InvalidStrategy

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BinaryMeasurement:
    """Two outcome measurement given by its first effect, ``E1 = I − E0``."""
    effect: np.ndarray

    def __post_init__(self):
        effect = as_matrix(self.effect, hermitian=True)
        if effect.shape != (2, 2):
            raise InvalidStrategy('A qubit effect is 2x2, got {}.'.format(effect.shape))
        effect = (effect + effect.conj().T) / 2
        effect.setflags(write=False)
        object.__setattr__(self, 'effect', effect)

    @classmethod
    def from_ket(cls, ket):
        """Projective measurement whose outcome 0 is ``ket``."""
        return cls(projector(np.asarray(ket) / np.linalg.norm(ket)))

    @property
    def effects(self):
        return self.effect, IDENTITY - self.effect

    def is_valid(self, tol=ALGEBRAIC_TOL):
        values = np.linalg.eigvalsh(self.effect)
        return bool(values[0] >= -tol and values[-1] <= 1 + tol)

    def probability(self, outcome, state):
        return float(np.real(np.trace(self.effects[outcome] @ state)))

    def to_json(self):
        return [[[[float(v.real), float(v.imag)] for v in row] for row in e] for e in self.effects]

    @classmethod
    def from_json(cls, data):
        first = np.array([[complex(re, im) for re, im in row] for row in data[0]])
        measurement = cls(first)
        if len(data) > 1:
            second = np.array([[complex(re, im) for re, im in row] for row in data[1]])
            if np.max(np.abs(first + second - IDENTITY)) > ALGEBRAIC_TOL:
                raise InvalidStrategy('Effects do not sum to the identity.')
        return measurement


# σ_Y, σ_X and σ_Z, outcome 0 on the +1 eigenvector.
MUB = (
    BinaryMeasurement.from_ket(KET_Y_PLUS),
    BinaryMeasurement.from_ket(KET_PLUS),
    BinaryMeasurement.from_ket(KET_0),
    )


@dataclass(frozen=True, eq=False)
class QracStrategy:
    states: Tuple[np.ndarray, ...]
    channels: Tuple[ChoiMatrix, ChoiMatrix]
    measurements: Tuple[BinaryMeasurement, BinaryMeasurement, BinaryMeasurement] = MUB

    @classmethod
    def from_kets(cls, kets, channels, measurements=MUB):
        return cls(tuple(projector(np.asarray(k) / np.linalg.norm(k)) for k in kets),
                   tuple(channels), tuple(measurements))

    def validate(self):
        if len(self.states) != 4 or len(self.channels) != 2 or len(self.measurements) != 3:
            raise InvalidStrategy('A strategy has 4 states, 2 channels and 3 measurements.')
        for index, state in enumerate(self.states):
            try:
                state = check_state(state)
            except InvalidState as e:
                raise InvalidStrategy('State {}: {}'.format(index, '; '.join(e.messages)))
            if abs(np.real(np.trace(state @ state)) - 1) > ALGEBRAIC_TOL:
                raise InvalidStrategy('State {} is not pure.'.format(index))
        for x2, channel in enumerate(self.channels):
            if not validate_choi(channel).valid:
                raise InvalidStrategy('Channel for x2={} is not CPTP.'.format(x2))
        for y, measurement in enumerate(self.measurements):
            if not measurement.is_valid():
                raise InvalidStrategy('Measurement {} has an effect outside [0, I].'.format(y))
        return self

    def received_state(self, x0, x1, x2):
        return self.channels[x2].act(self.states[2 * x0 + x1])

    def to_json(self):
        return {
            'states': [list(state_to_bloch(s)) for s in self.states],
            'channels': [c.to_json() for c in self.channels],
            'measurements': [m.to_json() for m in self.measurements],
            }

    @classmethod
    def from_json(cls, data):
        try:
            states = tuple(bloch_to_state(v, pure=True) for v in data['states'])
            channels = tuple(ChoiMatrix.from_json(c) for c in data['channels'])
            measurements = tuple(BinaryMeasurement.from_json(m) for m in data.get('measurements', ())) or MUB
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidStrategy('Malformed strategy: {}'.format(e))
        return cls(states, channels, measurements)


def success_table(strategy, task):
    """``p(z = f(x, y) | x, y)`` as an array indexed ``[x0, x1, x2, y]``."""
    table = np.zeros((2, 2, 2, 3))
    for x in INPUTS:
        received = strategy.received_state(*x)
        for y in QUESTIONS:
            table[x + (y,)] = strategy.measurements[y].probability(task.f(*x, y), received)
    return table


def eval_qrac_strategy(strategy, task):
    """Exact success probability of a QRAC strategy on ``task``."""
    strategy.validate()
    value = average_success(task, np.clip(success_table(strategy, task), 0, 1))
    logger.debug('QRAC value on %r: %.12f', task.label, value)
    return value


def trivial_strategy():
    """Always ``|0⟩``, identity channels and σ_Z for every question."""
    z = MUB[2]
    channel = ChoiMatrix.identity()
    return QracStrategy.from_kets([KET_0] * 4, (channel, channel), (z, z, z))


def vertex_strategy(assignment, rotation):
    """States on the cube vertices of ``assignment``, identity then ``rotation``."""
    states = tuple(bloch_to_state(cube_vertex(signs), pure=True) for signs in assignment)
    channels = (ChoiMatrix.identity(), ChoiMatrix.from_unitary(rotation.unitary()))
    return QracStrategy(states, channels, MUB)


def per_question_values(strategy, task):
    """Average success of each question over the eight inputs."""
    table = success_table(strategy, task).reshape(8, 3)
    return tuple(float(v) for v in table.mean(axis=0))
