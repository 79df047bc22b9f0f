# -*- coding: utf-8 -*-
"""Small dense linear algebra for qubit states, effects and channels.

Matrices are plain ``numpy`` complex arrays. Global phases of unitaries are
never normalized, comparisons that need it go through
:func:`phase_insensitive_distance`.
"""
import logging
import math
from typing import NamedTuple

import numpy as np

from .exceptions import NoConvergence, NormViolation, NotHermitian

logger = logging.getLogger(__name__)

STRUCTURAL_TOL = 1e-9
ALGEBRAIC_TOL = 1e-8
OPTIMIZATION_TOL = 1e-6

MAX_SWEEPS = 100
# Jacobi stops once every off-diagonal entry is this small relative to ‖M‖.
OFF_DIAGONAL_TOL = 1e-12
PIVOT_TOL = 1e-15

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

KET_0 = np.array([1, 0], dtype=complex)
KET_1 = np.array([0, 1], dtype=complex)
KET_PLUS = np.array([1, 1], dtype=complex) / math.sqrt(2)
KET_MINUS = np.array([1, -1], dtype=complex) / math.sqrt(2)
KET_Y_PLUS = np.array([1, 1j], dtype=complex) / math.sqrt(2)
KET_Y_MINUS = np.array([1, -1j], dtype=complex) / math.sqrt(2)


class BlochVector(NamedTuple):
    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, values):
        x, y, z = (float(v) for v in np.asarray(values, dtype=float).reshape(3))
        return cls(x, y, z)

    def as_array(self):
        return np.array(self, dtype=float)

    @property
    def norm(self):
        return math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2)

    def is_pure(self, tol=STRUCTURAL_TOL):
        return abs(self.norm - 1) <= tol


def as_matrix(entries, hermitian=False, tol=STRUCTURAL_TOL):
    """Return ``entries`` as a square complex matrix.

    Raises ValueError on non finite entries and NotHermitian when
    ``hermitian`` is asserted and ``‖M − M†‖_max`` exceeds ``tol``.
    """
    matrix = np.array(entries, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError('Expected a square matrix, got shape {}.'.format(matrix.shape))
    if not np.all(np.isfinite(matrix)):
        raise ValueError('Matrix has non finite entries.')
    if hermitian and not is_hermitian(matrix, tol):
        raise NotHermitian(
            'Matrix is not Hermitian (deviation {:.3e}).'.format(hermitian_deviation(matrix))
            )
    return matrix


def hermitian_deviation(matrix):
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def is_hermitian(matrix, tol=STRUCTURAL_TOL):
    return hermitian_deviation(np.asarray(matrix)) <= tol


def dagger(matrix):
    return np.asarray(matrix).conj().T


def projector(ket):
    ket = np.asarray(ket, dtype=complex).reshape(-1)
    return np.outer(ket, ket.conj())


def normalize(ket):
    ket = np.asarray(ket, dtype=complex).reshape(-1)
    return ket / np.linalg.norm(ket)


def _jacobi_rotate(a, v, p, q):
    apq = a[p, q]
    magnitude = abs(apq)
    # Phase that turns the pivot real before the real Jacobi rotation.
    phase = apq.conjugate() / magnitude
    angle = 0.5 * math.atan2(2 * magnitude, (a[p, p] - a[q, q]).real)
    c, s = math.cos(angle), math.sin(angle)

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p + phase * s * col_q
    a[:, q] = -s * col_p + phase * c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p + phase.conjugate() * s * row_q
    a[q, :] = -s * row_p + phase.conjugate() * c * row_q
    a[p, q] = a[q, p] = 0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    col_p, col_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * col_p + phase * s * col_q
    v[:, q] = -s * col_p + phase * c * col_q


def herm_eig(matrix, tol=STRUCTURAL_TOL, max_sweeps=MAX_SWEEPS):
    """Eigendecomposition of a small Hermitian matrix by cyclic Jacobi sweeps.

    Returns the eigenvalues in descending order and a unitary whose columns
    are the matching eigenvectors, so that ``M = V diag(λ) V†``.
    """
    a = as_matrix(matrix, hermitian=True, tol=tol)
    a = (a + a.conj().T) / 2
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))

    off_diagonal = ~np.eye(n, dtype=bool)
    for sweep in range(max_sweeps):
        if n < 2 or float(np.max(np.abs(a[off_diagonal]))) <= OFF_DIAGONAL_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > PIVOT_TOL * scale:
                    _jacobi_rotate(a, v, p, q)
    else:
        raise NoConvergence('Jacobi sweeps did not converge after {} sweeps.'.format(max_sweeps))

    values = np.real(np.diag(a))
    order = np.argsort(-values, kind='stable')
    return values[order], v[:, order]


def bloch_to_state(vector, pure=False, tol=STRUCTURAL_TOL):
    """Density operator ``(I + xσ_X + yσ_Y + zσ_Z)/2`` of a Bloch vector."""
    vector = BlochVector.from_array(vector)
    if vector.norm > 1 + tol:
        raise NormViolation('Bloch vector {} has norm {:.12f} > 1.'.format(tuple(vector), vector.norm))
    if pure and not vector.is_pure(tol):
        raise NormViolation('Bloch vector {} is not a pure state.'.format(tuple(vector)))
    return (IDENTITY + sum(c * s for c, s in zip(vector, PAULIS))) / 2


def state_to_bloch(state):
    """Bloch vector of a density operator, or of a ket given as a 1-d array."""
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        state = projector(normalize(state))
    return BlochVector(*(float(np.real(np.trace(state @ s))) for s in PAULIS))


def unit_axis(axis, tol=STRUCTURAL_TOL):
    axis = np.asarray(axis, dtype=float).reshape(3)
    if abs(np.linalg.norm(axis) - 1) > tol:
        raise NormViolation('Rotation axis {} is not normalized.'.format(tuple(axis)))
    return axis


def rotation_unitary(axis, angle):
    """``exp(−i·angle·(n·σ)/2)``, a right-handed rotation of the Bloch sphere."""
    n = unit_axis(axis)
    generator = sum(c * s for c, s in zip(n, PAULIS))
    return math.cos(angle / 2) * IDENTITY - 1j * math.sin(angle / 2) * generator


def bloch_rotation_matrix(axis, angle):
    """Real 3×3 rotation about ``axis`` (Rodrigues formula)."""
    n = unit_axis(axis)
    cross = np.array([
        [0, -n[2], n[1]],
        [n[2], 0, -n[0]],
        [-n[1], n[0], 0],
        ])
    return math.cos(angle) * np.eye(3) + math.sin(angle) * cross + (1 - math.cos(angle)) * np.outer(n, n)


def adjoint_action(unitary):
    """3×3 matrix of ``ρ ↦ UρU†`` acting on Bloch vectors."""
    unitary = np.asarray(unitary, dtype=complex)
    return np.array([
        [0.5 * np.real(np.trace(si @ unitary @ sj @ unitary.conj().T)) for sj in PAULIS]
        for si in PAULIS
        ])


def phase_insensitive_distance(u, v):
    """``1 − |Tr(U†V)|/2`` for 2×2 unitaries, zero iff equal up to phase."""
    return 1 - abs(np.trace(dagger(u) @ np.asarray(v))) / 2


def fidelity(ket, state):
    """Squared overlap of a ket with a ket or density operator."""
    ket = normalize(ket)
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        return float(abs(np.vdot(ket, normalize(state))) ** 2)
    return float(np.real(np.vdot(ket, state @ ket)))


def random_unitary(rng, dim=2):
    """Haar random unitary from the QR decomposition of a Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_ket(rng, dim=2):
    return random_unitary(rng, dim)[:, 0]
