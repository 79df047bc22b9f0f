# -*- coding: utf-8 -*-
"""See-saw maximization of the qubit strategy value.

Each cycle re-optimizes the measurements, then the prepared states, then the
two channels while the other two groups stay fixed. The first two steps are
exact eigenproblems; the channel step is projected gradient ascent on the
CPTP set, so the value never decreases along a run.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from django.conf import settings

from ..channels.choi import ChoiMatrix, project_cptp
from ..numerics.linalg import IDENTITY, herm_eig, projector, random_ket, random_unitary
from ..protocols.qrac import MUB, BinaryMeasurement, QracStrategy, success_table
from ..racs.guessing import INPUTS, QUESTIONS, average_success
from .exceptions import InvalidSeesawRun

logger = logging.getLogger(__name__)

CYCLE_TOL = 1e-9
MONOTONE_TOL = 1e-12
DEGENERACY_TOL = 1e-12
MAX_HALVINGS = 50
CHANNEL_STEPS = 10
STATIONARY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SeesawState:
    """Where a restart ended: its strategy, value and per-cycle values."""
    strategy: QracStrategy
    value: float
    cycles: int
    seed: int
    restart: int = 0
    ledger: Tuple[float, ...] = ()

    def to_json(self):
        return {
            'value': self.value,
            'cycles': self.cycles,
            'seed': self.seed,
            'restart': self.restart,
            'ledger': list(self.ledger),
            'strategy': self.strategy.to_json(),
            }

    @classmethod
    def from_json(cls, data):
        return cls(
            strategy=QracStrategy.from_json(data['strategy']),
            value=data['value'],
            cycles=data['cycles'],
            seed=data['seed'],
            restart=data.get('restart', 0),
            ledger=tuple(data.get('ledger', ())),
            )


def strategy_value(strategy, task):
    return average_success(task, np.clip(success_table(strategy, task), 0, 1))


def received_states(states, channels):
    """Channel outputs indexed by ``(x0, x1, x2)``."""
    return {x: channels[x[2]].act(states[2 * x[0] + x[1]]) for x in INPUTS}


def _hermitian(matrix):
    return (matrix + matrix.conj().T) / 2


def opt_measurements(received, task):
    """Best two outcome measurement for each question given the received states.

    Outcome 0 is the projector onto the positive eigenspace of
    ``Σ_x (−1)^{f(x, y)} ρ_x``; a vanishing operator gives the effect ``I/2``.
    """
    measurements = []
    for y in QUESTIONS:
        difference = _hermitian(sum((-1) ** task.f(*x, y) * np.asarray(received[x]) for x in INPUTS))
        values, vectors = herm_eig(difference)
        if np.max(np.abs(values)) <= DEGENERACY_TOL:
            effect = IDENTITY / 2
        else:
            effect = np.zeros((2, 2), dtype=complex)
            for value, vector in zip(values, vectors.T):
                if value > DEGENERACY_TOL:
                    effect = effect + projector(vector)
        measurements.append(BinaryMeasurement(effect))
    return tuple(measurements)


def state_score(channels, measurements, task, x0, x1):
    """Operator whose expectation in the prepared state is its share of the value."""
    weights = task.weights
    score = np.zeros((2, 2), dtype=complex)
    for x2, y in itertools.product((0, 1), QUESTIONS):
        effect = measurements[y].effects[task.f(x0, x1, x2, y)]
        score = score + weights[y] / 8 * channels[x2].adjoint(effect)
    return _hermitian(score)


def opt_states(channels, measurements, task, current=None):
    """Top eigenvector of each state's score operator.

    A score proportional to the identity leaves ``current`` in place; ties in
    the top eigenspace go to the first eigenvector found.
    """
    states = []
    for index, (x0, x1) in enumerate(itertools.product((0, 1), repeat=2)):
        values, vectors = herm_eig(state_score(channels, measurements, task, x0, x1))
        if current is not None and values[0] - values[-1] <= DEGENERACY_TOL:
            states.append(np.asarray(current[index]))
        else:
            states.append(projector(vectors[:, 0]))
    return tuple(states)


def channel_weight(states, measurements, task, x2):
    """``W`` such that the channel's share of the value is ``Tr[J W]``."""
    weights = task.weights
    weight = np.zeros((4, 4), dtype=complex)
    for (x0, x1), y in itertools.product(itertools.product((0, 1), repeat=2), QUESTIONS):
        effect = measurements[y].effects[task.f(x0, x1, x2, y)]
        weight = weight + weights[y] / 8 * np.kron(effect, np.asarray(states[2 * x0 + x1]).T)
    return _hermitian(weight)


def _linear_value(matrix, weight):
    return float(np.real(np.trace(matrix @ weight)))


def opt_channel(states, measurements, task, current, x2, steps=CHANNEL_STEPS):
    """Projected gradient ascent of ``Tr[J W]`` from ``current``.

    A step is kept only when it raises the value; otherwise the step size
    is halved, and after ``MAX_HALVINGS`` failures the current channel is
    returned. Halving also stops once the projected step no longer moves
    the channel, since smaller steps move it even less.
    """
    weight = channel_weight(states, measurements, task, x2)
    matrix = np.array(current.matrix)
    value = _linear_value(matrix, weight)
    step = 1.0
    moved = False
    for _ in range(steps):
        improved = False
        for _ in range(MAX_HALVINGS):
            candidate = project_cptp(matrix + step * weight)
            candidate_value = _linear_value(candidate, weight)
            if candidate_value > value + MONOTONE_TOL:
                improved = True
                break
            if np.max(np.abs(candidate - matrix)) <= STATIONARY_TOL:
                break
            step /= 2
        if not improved:
            logger.debug('Channel x2=%d: no progress from step %g', x2, step)
            break
        gain = candidate_value - value
        matrix, value, moved = candidate, candidate_value, True
        step *= 2
        if gain < CYCLE_TOL:
            break
    return ChoiMatrix(matrix) if moved else current


def initial_strategy(rng):
    """Haar random pure states, random unitary channels and the MUB measurements."""
    states = tuple(projector(random_ket(rng)) for _ in range(4))
    channels = tuple(ChoiMatrix.from_unitary(random_unitary(rng)) for _ in range(2))
    return QracStrategy(states, channels, MUB)


def seesaw_cycle(strategy, task):
    received = received_states(strategy.states, strategy.channels)
    measurements = opt_measurements(received, task)
    states = opt_states(strategy.channels, measurements, task, current=strategy.states)
    channels = tuple(
        opt_channel(states, measurements, task, strategy.channels[x2], x2) for x2 in (0, 1)
        )
    return QracStrategy(states, channels, measurements)


def run_restart(task, seed, restart=0, max_cycles=None, initial=None):
    """One see-saw run from a seeded random start, or from ``initial``."""
    max_cycles = settings.SEESAW_MAX_CYCLES if max_cycles is None else max_cycles
    if max_cycles < 1:
        raise InvalidSeesawRun('A see-saw run needs at least one cycle, got {}.'.format(max_cycles))
    rng = np.random.default_rng([seed, restart])
    strategy = initial or initial_strategy(rng)
    value = strategy_value(strategy, task)
    ledger = [value]
    cycles = 0
    while cycles < max_cycles:
        cycles += 1
        strategy = seesaw_cycle(strategy, task)
        previous, value = value, strategy_value(strategy, task)
        ledger.append(value)
        if value - previous < CYCLE_TOL:
            break
    logger.debug('Restart %d of seed %d: %.12f after %d cycles', restart, seed, value, cycles)
    return SeesawState(strategy, value, cycles, seed, restart, tuple(ledger))


def run_seesaw(task, restarts=None, seed=None, max_cycles=None, parallel=False):
    """Best see-saw value over ``restarts`` seeded restarts, a lower bound on the qubit optimum."""
    restarts = settings.SEESAW_RESTARTS if restarts is None else restarts
    if restarts < 1:
        raise InvalidSeesawRun('A see-saw run needs at least one restart, got {}.'.format(restarts))
    seed = settings.SEESAW_SEED if seed is None else seed
    if parallel:
        from ..utils import gather
        from .tasks import run_restart_task
        results = gather(
            run_restart_task.s(task.to_json(), seed, restart, max_cycles) for restart in range(restarts)
            )
        states = [SeesawState.from_json(result) for result in results]
    else:
        states = [run_restart(task, seed, restart, max_cycles) for restart in range(restarts)]
    best = states[0]
    for state in states[1:]:
        if state.value > best.value + MONOTONE_TOL:
            best = state
    logger.info('See-saw on %r: %.9f (restart %d of %d, seed %d)',
                task.label, best.value, best.restart, restarts, seed)
    return best
