# -*- coding: utf-8 -*-
"""Jones calculus of half- and quarter-wave plates.

Polarization kets are written in the ``(|H⟩, |V⟩)`` basis, identified with
``(|0⟩, |1⟩)``. Angles are fast-axis orientations in degrees, and a plate
of retardance δ at angle θ acts as ``R(−θ) diag(1, e^{−iδ}) R(θ)``.
"""
import math
from dataclasses import dataclass

import numpy as np

from ..numerics.linalg import KET_0, dagger, normalize
from .exceptions import InvalidPlate

HALF = 'half'
QUARTER = 'quarter'
RETARDANCE = {HALF: math.pi, QUARTER: math.pi / 2}


def rotation_matrix(angle):
    """Real frame rotation by ``angle`` degrees."""
    c, s = math.cos(math.radians(angle)), math.sin(math.radians(angle))
    return np.array([[c, s], [-s, c]], dtype=complex)


@dataclass(frozen=True)
class WavePlate:
    kind: str
    angle: float

    def __post_init__(self):
        if self.kind not in RETARDANCE:
            raise InvalidPlate('A wave plate is {!r} or {!r}, got {!r}.'.format(HALF, QUARTER, self.kind))
        if not math.isfinite(self.angle):
            raise InvalidPlate('Plate angle must be finite, got {!r}.'.format(self.angle))

    @property
    def retardance(self):
        return RETARDANCE[self.kind]

    def __str__(self):
        return '{}({:g}°)'.format('HWP' if self.kind == HALF else 'QWP', self.angle)


def hwp(angle):
    return WavePlate(HALF, float(angle))


def qwp(angle):
    return WavePlate(QUARTER, float(angle))


def waveplate_unitary(plate):
    retarder = np.diag([1, np.exp(-1j * plate.retardance)])
    return rotation_matrix(-plate.angle) @ retarder @ rotation_matrix(plate.angle)


def stack_unitary(plates):
    """Jones matrix of plates listed in the order the light crosses them."""
    unitary = np.eye(2, dtype=complex)
    for plate in plates:
        unitary = waveplate_unitary(plate) @ unitary
    return unitary


def output_ket(plates, ket=KET_0):
    """Polarization leaving ``plates`` when ``ket`` (default ``|H⟩``) enters."""
    return stack_unitary(plates) @ np.asarray(ket, dtype=complex)


def analyzer_ket(plates):
    """Input polarization that the plates send into the transmitted ``|H⟩`` port."""
    return normalize(dagger(stack_unitary(plates)) @ KET_0)
