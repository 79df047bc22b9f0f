# -*- coding: utf-8 -*-
"""Wave plate settings of the photonic QRAC and their ideal targets.

Alice prepares ``ψ_{x0x1}`` with HWP(α) followed by QWP(θ1), HWP(β),
QWP(θ2); Bob applies QWP(θ3), HWP(γ), QWP(θ4) when ``x2 = 1`` and the
identity stack otherwise; Charlie analyzes with an HWP and a QWP in front
of a polarizing beam splitter.
"""
import functools
import logging
from typing import NamedTuple

import numpy as np

from ..numerics.linalg import BlochVector, fidelity, phase_insensitive_distance, rotation_unitary, state_to_bloch
from ..racs.constructions import TABLE_ONE_RESOURCES, build_qrac_task
from ..racs.cube import MEASURED_AXIS, find_rotation
from ..racs.exceptions import UnknownTask
from .exceptions import LabelMismatch
from .jones import analyzer_ket, hwp, output_ket, qwp, stack_unitary

logger = logging.getLogger(__name__)

STATE_LABELS = ('psi_00', 'psi_01', 'psi_11', 'psi_10')
IDENTITY_LABEL = 'I'
BASIS_QUESTIONS = {'Y': 0, 'X': 1, 'Z': 2}
MEASUREMENT_PLATES = {'Y': (0.0, -45.0), 'X': (22.5, 0.0), 'Z': (0.0, 0.0)}

PREPARATION_TOL = 1e-4
UNITARY_TOL = 1e-6
ALIGNMENT_TOL = 1e-9


def state_bits(label):
    """``(x0, x1)`` of a state label such as ``psi_01``."""
    if label not in STATE_LABELS:
        raise LabelMismatch('Unknown state {!r}, expected one of {}.'.format(label, ', '.join(STATE_LABELS)))
    return int(label[-2]), int(label[-1])


class PreparationSetting(NamedTuple):
    alpha: float
    theta1: float
    beta: float
    theta2: float

    def plates(self):
        return hwp(self.alpha), qwp(self.theta1), hwp(self.beta), qwp(self.theta2)

    def ket(self):
        return output_ket(self.plates())


class UnitarySetting(NamedTuple):
    theta3: float
    gamma: float
    theta4: float

    def plates(self):
        return qwp(self.theta3), hwp(self.gamma), qwp(self.theta4)

    def unitary(self):
        return stack_unitary(self.plates())


IDENTITY_SETTING = UnitarySetting(45.0, -45.0, 45.0)


class SetupRow(NamedTuple):
    task: int
    state: str
    preparation: PreparationSetting
    unitary: str
    bob: UnitarySetting


class MeasurementCheck(NamedTuple):
    basis: str
    axis: BlochVector
    overlap: float

    @property
    def aligned(self):
        return abs(abs(self.overlap) - 1) <= ALIGNMENT_TOL

    @property
    def transmitted(self):
        """Eigenvalue of the Pauli observable that leaves by the transmitted port."""
        return 1 if self.overlap > 0 else -1


@functools.lru_cache(maxsize=None)
def intended_strategy(index):
    """Task and ideal qubit strategy of reference task ``index`` (5 to 8)."""
    kind, rotation = TABLE_ONE_RESOURCES.get(index, (None, None))
    if kind != 'QRAC':
        raise UnknownTask('Only tasks 5 to 8 have an optical setup, got {}.'.format(index))
    return build_qrac_task(find_rotation(rotation))


def verify_preparation(row):
    """Fidelity of the prepared polarization with the state the task needs."""
    _, strategy = intended_strategy(row.task)
    x0, x1 = state_bits(row.state)
    return fidelity(row.preparation.ket(), strategy.states[2 * x0 + x1])


def verify_unitary(label, setting):
    """Phase insensitive distance between Bob's plates and the labelled rotation.

    Labels follow the lab rotation sense, so ``R_n(θ)`` is compared with
    ``exp(+iθ n·σ/2)``.
    """
    rotation = find_rotation(label)
    axis = np.asarray(rotation.axis, dtype=float) / np.linalg.norm(rotation.axis)
    target = rotation_unitary(axis, -rotation.angle)
    return float(phase_insensitive_distance(target, setting.unitary()))


def verify_measurement(basis):
    """Compare Charlie's analyzer for ``basis`` with the Pauli axis it should read."""
    if basis not in MEASUREMENT_PLATES:
        raise LabelMismatch('Unknown basis {!r}, expected Y, X or Z.'.format(basis))
    half, quarter = MEASUREMENT_PLATES[basis]
    axis = state_to_bloch(analyzer_ket((hwp(half), qwp(quarter))))
    overlap = axis[MEASURED_AXIS[BASIS_QUESTIONS[basis]]]
    return MeasurementCheck(basis, axis, overlap)


def verify_setup(rows):
    """Check every row of a setup table, returning report rows."""
    report = []
    for row in rows:
        fidelity_ = verify_preparation(row)
        distance = verify_unitary(row.unitary, row.bob)
        passed = fidelity_ >= 1 - PREPARATION_TOL and distance <= UNITARY_TOL
        if not passed:
            logger.warning('Task %s %s fails: fidelity %.6f, distance %.3e', row.task, row.state, fidelity_, distance)
        report.append({
            'task': row.task, 'state': row.state, 'unitary': row.unitary,
            'fidelity': fidelity_, 'distance': distance, 'passed': passed,
            })
    identity = verify_unitary(IDENTITY_LABEL, IDENTITY_SETTING)
    report.append({
        'task': '', 'state': '', 'unitary': IDENTITY_LABEL, 'fidelity': None,
        'distance': identity, 'passed': identity <= UNITARY_TOL,
        })
    return report
