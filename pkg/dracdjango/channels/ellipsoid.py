# -*- coding: utf-8 -*-
"""Bloch ellipsoids of qubit channels and the reflection no-go check."""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..numerics.linalg import ALGEBRAIC_TOL, STRUCTURAL_TOL
from ..racs.cube import AXIS_NAMES, VERTICES, cube_vertex, default_assignment
from .choi import ChoiMatrix, validate_choi
from .exceptions import InvalidChannel, UnknownReflection

logger = logging.getLogger(__name__)

# Each reflection flips the Bloch axis missing from its name.
REFLECTIONS = {
    'XY': np.diag([1.0, 1.0, -1.0]),
    'XZ': np.diag([1.0, -1.0, 1.0]),
    'YZ': np.diag([-1.0, 1.0, 1.0]),
    }


@dataclass(frozen=True)
class EllipsoidParams:
    """Semi-axes and center of the image of the Bloch sphere.

    Both are expressed in the principal frame of the channel, with the third
    axis chosen along the largest center offset. ``lambdas`` carry signs so
    that their product has the sign of ``det T``; ``improper`` flags
    ``det T < 0``.
    """
    lambdas: Tuple[float, float, float]
    center: Tuple[float, float, float]
    improper: bool = False

    @property
    def offset_aligned(self):
        return math.hypot(self.center[0], self.center[1]) <= ALGEBRAIC_TOL


def ellipsoid_params(choi):
    if not validate_choi(choi).valid:
        raise InvalidChannel('Ellipsoid parameters need a CPTP channel.')
    linear, offset = choi.affine()
    u, s, vt = np.linalg.svd(linear)
    signs = np.ones(3)
    if np.linalg.det(u) < 0:
        signs[2] *= -1
    if np.linalg.det(vt) < 0:
        signs[2] *= -1
    lambdas = s * signs
    center = u.T @ offset

    axis = int(np.argmax(np.abs(center))) if np.any(np.abs(center) > ALGEBRAIC_TOL) else 2
    order = [i for i in range(3) if i != axis] + [axis]
    return EllipsoidParams(
        lambdas=tuple(float(v) for v in lambdas[order]),
        center=tuple(float(v) for v in center[order]),
        improper=bool(np.linalg.det(linear) < 0),
        )


def cp_necessary_condition(params, tol=STRUCTURAL_TOL):
    """``(λ1 + λ2)² ≤ (1 + λ3)² − t3²``, necessary for complete positivity."""
    l1, l2, l3 = params.lambdas
    t3 = params.center[2]
    return (l1 + l2) ** 2 <= (1 + l3) ** 2 - t3 ** 2 + tol


@dataclass(frozen=True)
class FeasibilityCertificate:
    """Why a face of cube states can or cannot be moved by a channel.

    A feasible mapping carries the rotation and its Choi matrix. An
    infeasible one carries the range of the free semi-axis λ3 that
    complete positivity requires and the range the unit ball allows.
    """
    kind: str
    rotation: Optional[np.ndarray] = None
    choi: Optional[ChoiMatrix] = None
    required_lambda3: Optional[float] = None
    allowed_lambda3: Optional[float] = None
    residual: float = 0.0

    def describe(self):
        if self.kind == 'rotation':
            return 'feasible: proper rotation, residual {:.1e}'.format(self.residual)
        return 'infeasible: λ₃ ∈ [{:.3f}, ∞) required, ≤ {:.3f} allowed'.format(
            self.required_lambda3, self.allowed_lambda3
            )


def best_rotation(sources, targets):
    """Proper rotation R minimizing Σ‖R s − t‖² (Kabsch without centering)."""
    sources = np.asarray(sources, dtype=float).reshape(-1, 3)
    targets = np.asarray(targets, dtype=float).reshape(-1, 3)
    u, _, vt = np.linalg.svd(targets.T @ sources)
    d = np.sign(np.linalg.det(u @ vt)) or 1.0
    rotation = u @ np.diag([1, 1, d]) @ vt
    residual = float(np.max(np.linalg.norm(sources @ rotation.T - targets, axis=1)))
    return rotation, residual


def reflection_feasibility(targets, sources):
    """Can a CPTP map send the ``sources`` states to the ``targets``?

    Pure targets force the image ellipsoid through their circumcircle, so a
    map that is not a rotation needs semi-axes equal to that circle's radius
    and a center offset equal to the circle's height. Complete positivity
    then bounds the remaining semi-axis from below while containment in the
    unit ball bounds it from above.
    """
    rotation, residual = best_rotation(sources, targets)
    if residual <= ALGEBRAIC_TOL:
        choi = ChoiMatrix.from_affine(rotation, np.zeros(3))
        return True, FeasibilityCertificate('rotation', rotation=rotation, choi=choi, residual=residual)

    targets = np.asarray(targets, dtype=float).reshape(-1, 3)
    centroid = targets.mean(axis=0)
    height = float(np.linalg.norm(centroid))
    radius = float(np.mean(np.linalg.norm(targets - centroid, axis=1)))
    required = math.sqrt((2 * radius) ** 2 + height ** 2) - 1
    allowed = 1 - height
    feasible = required <= allowed + STRUCTURAL_TOL
    logger.debug('No rotation fits (residual %.3e); lambda3 needs %.6f, ball allows %.6f',
                 residual, required, allowed)
    return feasible, FeasibilityCertificate(
        'ellipsoid', required_lambda3=required, allowed_lambda3=allowed, residual=residual
        )


def reflection_face(reflection):
    """Cube states on the positive side of the axis ``reflection`` flips."""
    if reflection not in REFLECTIONS:
        raise UnknownReflection('Unknown reflection {!r}, expected one of {}.'.format(
            reflection, ', '.join(REFLECTIONS)))
    axis = AXIS_NAMES.index(next(a for a in AXIS_NAMES if a not in reflection))
    return np.array([cube_vertex(v) for v in VERTICES if v[axis] == 1])


def check_reflection(reflection):
    sources = reflection_face(reflection)
    return reflection_feasibility(sources @ REFLECTIONS[reflection].T, sources)


def check_rotation(rotation):
    """Feasibility of a cube rotation on the face its default assignment uses."""
    sources = np.array([cube_vertex(v) for v in default_assignment(rotation)])
    return reflection_feasibility(sources @ np.asarray(rotation.matrix, dtype=float).T, sources)
