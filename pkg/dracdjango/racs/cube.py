# -*- coding: utf-8 -*-
"""The rotation group of the cube whose vertices carry the encoded states.

Vertices are written as sign triples ``(±1, ±1, ±1)`` of the Bloch
vector ``(±1, ±1, ±1)/√3``. A rotation is admissible when it fixes no
vertex: it can then carry the four states prepared for ``x2 = 0`` onto
four different vertices used for ``x2 = 1``.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..numerics.linalg import bloch_rotation_matrix, rotation_unitary
from .exceptions import InadmissibleRotation, UnknownRotation

SQRT3 = math.sqrt(3)
VERTICES = tuple(itertools.product((1, -1), repeat=3))
AXIS_NAMES = ('X', 'Y', 'Z')

# Bloch component read by the measurement of question y: σ_Y, σ_X, σ_Z.
MEASURED_AXIS = (1, 0, 2)


def _axis_label(axis):
    terms = []
    for component, name in zip(axis, AXIS_NAMES):
        if component:
            sign = '-' if component < 0 else ('+' if terms else '')
            terms.append(sign + name)
    return ''.join(terms)


def _angle_label(angle):
    labels = {
        math.pi / 2: 'π/2', math.pi: 'π', 3 * math.pi / 2: '3π/2',
        2 * math.pi / 3: '2π/3', 4 * math.pi / 3: '4π/3',
        }
    for value, label in labels.items():
        if math.isclose(angle, value):
            return label
    return '{:.6g}'.format(angle)


@dataclass(frozen=True)
class CubeRotation:
    matrix: Tuple[Tuple[int, int, int], ...]
    axis: Tuple[int, int, int]
    angle: float

    @classmethod
    def about(cls, axis, angle):
        unit = np.asarray(axis, dtype=float) / np.linalg.norm(axis)
        matrix = np.rint(bloch_rotation_matrix(unit, angle)).astype(int)
        return cls(tuple(tuple(int(v) for v in row) for row in matrix), tuple(axis), angle)

    @property
    def label(self):
        if self.is_identity:
            return 'I'
        axis = _axis_label(self.axis)
        if len(axis) > 1:
            axis = '{' + axis + '}'
        return 'R_{}({})'.format(axis, _angle_label(self.angle))

    @property
    def is_identity(self):
        return self.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    @property
    def admissible(self):
        return not any(self.apply(v) == v for v in VERTICES)

    def as_array(self):
        return np.array(self.matrix, dtype=float)

    def apply(self, signs):
        return tuple(int(v) for v in np.array(self.matrix) @ np.array(signs))

    def unitary(self):
        unit = np.asarray(self.axis, dtype=float) / np.linalg.norm(self.axis)
        return rotation_unitary(unit, self.angle)


def enumerate_cube_rotations():
    """The 24 proper rotations mapping the cube onto itself.

    Ordered as identity, quarter and half turns about the coordinate axes,
    half turns about the edge axes, then the turns about body diagonals.
    """
    rotations = [CubeRotation.about((0, 0, 1), 0.0)]
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        for angle in (math.pi / 2, math.pi, 3 * math.pi / 2):
            rotations.append(CubeRotation.about(axis, angle))
    for axis in ((1, 1, 0), (1, -1, 0), (0, 1, 1), (0, 1, -1), (1, 0, 1), (-1, 0, 1)):
        rotations.append(CubeRotation.about(axis, math.pi))
    for axis in ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1)):
        for angle in (2 * math.pi / 3, 4 * math.pi / 3):
            rotations.append(CubeRotation.about(axis, angle))
    return rotations


def find_rotation(label):
    for rotation in enumerate_cube_rotations():
        if rotation.label == label:
            return rotation
    raise UnknownRotation('No cube rotation is labelled {!r}.'.format(label))


def cube_vertex(signs):
    return np.asarray(signs, dtype=float) / SQRT3


def eq1_signs(x0, x1, x2=0):
    """Sign triple of the vertex the canonical encoding uses for x."""
    return ((-1) ** x1, (-1) ** x0, (-1) ** x2)


def canonical_assignment():
    return tuple(eq1_signs(x0, x1) for x0, x1 in itertools.product((0, 1), repeat=2))


def is_complementary(rotation, assignment):
    """Whether the images of the four vertices are exactly the other four."""
    images = {rotation.apply(v) for v in assignment}
    return len(set(assignment)) == 4 and images == set(VERTICES) - set(assignment)


def default_assignment(rotation):
    """Vertices for ``(x0, x1) = 00, 01, 10, 11`` that ``rotation`` sends onto the rest.

    The x and y signs are those of the canonical encoding; the first z sign
    pattern (all ``+`` first) that works is taken, so rotations that move
    the ``z = +1`` face onto ``z = −1`` keep the canonical face.
    """
    if not rotation.admissible:
        raise InadmissibleRotation('{} fixes a vertex of the cube.'.format(rotation.label))
    for pattern in itertools.product((1, -1), repeat=4):
        assignment = tuple((sx, sy, sz) for (sx, sy, _), sz in zip(canonical_assignment(), pattern))
        if is_complementary(rotation, assignment):
            return assignment
    raise InadmissibleRotation('No face assignment fits {}.'.format(rotation.label))


def derived_truth_table(rotation, assignment):
    """Truth table read off the vertices by measuring σ_Y, σ_X and σ_Z.

    Input ``(x0, x1, 0)`` sits at ``assignment[2·x0 + x1]`` and
    ``(x0, x1, 1)`` at its image; the answer is 1 when the measured Bloch
    component is negative.
    """
    table = []
    for x0, x1, x2 in itertools.product((0, 1), repeat=3):
        signs = assignment[2 * x0 + x1]
        if x2:
            signs = rotation.apply(signs)
        table.extend(int(signs[axis] < 0) for axis in MEASURED_AXIS)
    return tuple(table)
