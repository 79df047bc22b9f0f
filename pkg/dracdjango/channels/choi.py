# -*- coding: utf-8 -*-
"""Choi matrices of qubit channels.

The subsystem order is output first::

    J = Σ_ij Φ(|i⟩⟨j|) ⊗ |i⟩⟨j|,   J[2k + i, 2l + j] = ⟨k|Φ(|i⟩⟨j|)|l⟩

so ``Φ(ρ) = Tr_in[J (I ⊗ ρᵀ)]`` and trace preservation reads
``Tr_out J = I``. The explicit task 1-3 matrices only pass the TP test in
this order, see :func:`resolve_convention`.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..numerics.linalg import (
    ALGEBRAIC_TOL, IDENTITY, PAULIS, STRUCTURAL_TOL, as_matrix, herm_eig, is_hermitian,
    )
from .exceptions import InvalidChannel, InvalidState

logger = logging.getLogger(__name__)

OUTPUT_FIRST = 'output-first'
INPUT_FIRST = 'input-first'
CHOI_CONVENTION = OUTPUT_FIRST

PROJECTION_TOL = 1e-9
MAX_PROJECTION_ROUNDS = 200
MIN_INPUT_WEIGHT = 1e-12


class ChoiValidation(NamedTuple):
    cp: bool
    tp: bool
    min_eigenvalue: float
    tp_residual: float

    @property
    def valid(self):
        return self.cp and self.tp


def _tensor(matrix):
    """View a 4×4 output-first Choi matrix as J[k, i, l, j]."""
    return np.asarray(matrix).reshape(2, 2, 2, 2)


def trace_out_output(matrix, convention=OUTPUT_FIRST):
    t = _tensor(matrix)
    if convention == OUTPUT_FIRST:
        return np.einsum('kikj->ij', t)
    return np.einsum('ikjk->ij', t)


def tp_residual(matrix, convention=OUTPUT_FIRST):
    return float(np.max(np.abs(trace_out_output(matrix, convention) - IDENTITY)))


def resolve_convention(matrices):
    """Return the subsystem order under which every matrix is trace preserving.

    Both orders are tried on the given Choi matrices; matrices of unitary
    channels pass under both and do not discriminate. Returns None when no
    single order fits.
    """
    matrices = [np.asarray(getattr(m, 'matrix', m)) for m in matrices]
    fitting = [
        convention for convention in (OUTPUT_FIRST, INPUT_FIRST)
        if all(tp_residual(m, convention) <= ALGEBRAIC_TOL for m in matrices)
        ]
    if len(fitting) == 1:
        return fitting[0]
    if fitting:
        logger.debug('Both subsystem orders fit, keeping %s', CHOI_CONVENTION)
        return CHOI_CONVENTION
    return None


@dataclass(frozen=True, eq=False)
class ChoiMatrix:
    """A 4×4 Hermitian Choi matrix in the output-first order."""
    matrix: np.ndarray
    convention: str = CHOI_CONVENTION

    def __post_init__(self):
        matrix = as_matrix(self.matrix, hermitian=True)
        if matrix.shape != (4, 4):
            raise InvalidChannel('A qubit Choi matrix is 4x4, got {}.'.format(matrix.shape))
        if self.convention != CHOI_CONVENTION:
            raise InvalidChannel('Unsupported subsystem order {!r}.'.format(self.convention))
        matrix = (matrix + matrix.conj().T) / 2
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def from_unitary(cls, unitary):
        w = np.asarray(unitary, dtype=complex).reshape(4)
        return cls(np.outer(w, w.conj()))

    @classmethod
    def from_kraus(cls, operators):
        matrix = np.zeros((4, 4), dtype=complex)
        for k in operators:
            w = np.asarray(k, dtype=complex).reshape(4)
            matrix += np.outer(w, w.conj())
        return cls(matrix)

    @classmethod
    def from_affine(cls, linear, offset):
        """Channel acting on Bloch vectors as ``r ↦ T r + t``."""
        linear = np.asarray(linear, dtype=float).reshape(3, 3)
        offset = np.asarray(offset, dtype=float).reshape(3)
        image_identity = IDENTITY + sum(t * s for t, s in zip(offset, PAULIS))
        image_pauli = [sum(linear[a, b] * PAULIS[a] for a in range(3)) for b in range(3)]
        tensor = np.zeros((2, 2, 2, 2), dtype=complex)
        for i in range(2):
            for j in range(2):
                unit = np.zeros((2, 2), dtype=complex)
                unit[i, j] = 1
                # |i⟩⟨j| = (Tr(E) I + Σ_b Tr(E σ_b) σ_b) / 2
                image = np.trace(unit) * image_identity
                image = image + sum(np.trace(unit @ s) * image_pauli[b] for b, s in enumerate(PAULIS))
                tensor[:, i, :, j] = image / 2
        return cls(tensor.reshape(4, 4))

    @classmethod
    def identity(cls):
        return cls.from_unitary(IDENTITY)

    @classmethod
    def depolarizing(cls):
        return cls(np.eye(4, dtype=complex) / 2)

    @classmethod
    def from_json(cls, data):
        convention = data.get('convention', CHOI_CONVENTION)
        rows = data['matrix']
        matrix = np.array([[complex(re, im) for re, im in row] for row in rows])
        return cls(matrix, convention)

    def to_json(self):
        return {
            'convention': self.convention,
            'matrix': [[[float(v.real), float(v.imag)] for v in row] for row in self.matrix],
            }

    def act(self, state):
        return np.einsum('kilj,ij->kl', _tensor(self.matrix), np.asarray(state, dtype=complex))

    def adjoint(self, effect):
        """Heisenberg picture: ``Tr[E Φ(ρ)] = Tr[Φ†(E) ρ]``."""
        return np.einsum('kilj,lk->ji', _tensor(self.matrix), np.asarray(effect, dtype=complex))

    def affine(self):
        """The Bloch action ``r ↦ T r + t`` as ``(T, t)``."""
        offset = np.array([0.5 * np.real(np.trace(s @ self.act(IDENTITY))) for s in PAULIS])
        linear = np.array([
            [0.5 * np.real(np.trace(sa @ self.act(sb))) for sb in PAULIS]
            for sa in PAULIS
            ])
        return linear, offset

    def validation(self):
        return validate_choi(self)


def validate_choi(choi):
    """CP and TP flags of a Choi matrix with the numbers behind them."""
    matrix = np.asarray(getattr(choi, 'matrix', choi))
    as_matrix(matrix, hermitian=True)
    values, _ = herm_eig(matrix)
    residual = tp_residual(matrix)
    return ChoiValidation(
        cp=bool(values[-1] >= -ALGEBRAIC_TOL),
        tp=bool(residual <= ALGEBRAIC_TOL),
        min_eigenvalue=float(values[-1]),
        tp_residual=residual,
        )


def check_state(state):
    state = np.asarray(state, dtype=complex)
    if state.shape != (2, 2) or not is_hermitian(state):
        raise InvalidState('A qubit state is a Hermitian 2x2 matrix.')
    if abs(np.trace(state) - 1) > STRUCTURAL_TOL:
        raise InvalidState('State trace is {}.'.format(np.trace(state).real))
    if np.linalg.eigvalsh(state).min() < -ALGEBRAIC_TOL:
        raise InvalidState('State is not positive semidefinite.')
    return state


def apply_channel(choi, state):
    """Output state of a valid channel on a valid input state."""
    if not validate_choi(choi).valid:
        raise InvalidChannel('Channel is not CPTP.')
    return choi.act(check_state(state))


def project_psd(matrix):
    matrix = (matrix + matrix.conj().T) / 2
    values, vectors = np.linalg.eigh(matrix)
    return (vectors * np.clip(values, 0, None)) @ vectors.conj().T


def project_tp(matrix):
    excess = trace_out_output(matrix) - IDENTITY
    return matrix - np.kron(IDENTITY, excess) / 2


def normalize_trace(matrix):
    """Congruence ``(I ⊗ T^{-1/2}) J (I ⊗ T^{-1/2})`` with ``T = Tr_out J``.

    The result is exactly trace preserving and keeps J positive
    semidefinite. Returns None when T is singular.
    """
    values, vectors = np.linalg.eigh(trace_out_output(matrix))
    if values[0] <= MIN_INPUT_WEIGHT:
        return None
    root = (vectors / np.sqrt(values)) @ vectors.conj().T
    side = np.kron(IDENTITY, root)
    return side @ matrix @ side


def project_cptp(matrix, tol=PROJECTION_TOL, max_rounds=MAX_PROJECTION_ROUNDS):
    """CPTP Choi matrix near ``matrix`` by Dykstra's alternating projections.

    Runs until the PSD iterate is within ``tol`` of trace preserving, or
    ``max_rounds`` is spent, then removes the remaining TP residual with
    :func:`normalize_trace`. Valid Choi matrices are returned unchanged.
    """
    state = np.array(matrix, dtype=complex)
    cp_change = np.zeros_like(state)
    tp_change = np.zeros_like(state)
    cp_projection = project_psd(state)
    for _ in range(max_rounds):
        pre_cp = state - cp_change
        cp_projection = project_psd(pre_cp)
        cp_change = cp_projection - pre_cp
        if tp_residual(cp_projection) <= tol:
            break
        pre_tp = cp_projection - tp_change
        state = project_tp(pre_tp)
        tp_change = state - pre_tp
    else:
        logger.debug('CPTP projection stopped after %d rounds', max_rounds)
    repaired = normalize_trace(cp_projection)
    if repaired is None:
        return (state + state.conj().T) / 2
    return (repaired + repaired.conj().T) / 2
