# -*- coding: utf-8 -*-
"""Entanglement assisted distributed RAC on a shared GHZ state.

Alice measures her qubit in the equatorial basis of angle
``φ(z1) = π/4·(1 + 2·z1)``, ``z1 = x0 ⊕ x1``, and sends ``m1 = a ⊕ x0``.
Bob measures in the basis of polar angle ``θ(m1 ⊕ x2)`` and sends
``m2 = m1 ⊕ b``. Charlie measures σ_Y, σ_X or σ_Z and answers
``m2 ⊕ c``. Probabilities come from the full three qubit state, no
sampling is involved.
"""
import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..numerics.linalg import (
    IDENTITY, KET_0, KET_1, KET_MINUS, KET_PLUS, KET_Y_MINUS, KET_Y_PLUS, rotation_unitary,
    )
from ..racs.guessing import INPUTS, QUESTIONS, average_success
from .behavior import Behavior
from .exceptions import InvalidStrategy

logger = logging.getLogger(__name__)

GHZ = np.zeros(8, dtype=complex)
GHZ[0] = GHZ[7] = 1 / math.sqrt(2)

# Frame of Charlie's qubit for each family, chosen so that φ′ turns his
# states about the axis normal to the reflection plane.
REFLECTION_FRAMES = {
    'XY': IDENTITY,
    'XZ': rotation_unitary((1, 0, 0), -math.pi / 2),
    'YZ': rotation_unitary((0, 1, 0), math.pi / 2),
    }

CHARLIE_KETS = (
    (KET_Y_PLUS, KET_Y_MINUS),
    (KET_PLUS, KET_MINUS),
    (KET_0, KET_1),
    )


def alice_angle(z1, offset=0.0):
    return math.pi / 4 * (1 + 2 * z1) + offset


def bob_angle(beta):
    """Polar angle with ``cos²θ = (√3 + (−1)^β)/(2√3)``."""
    return math.acos(math.sqrt((math.sqrt(3) + (-1) ** beta) / (2 * math.sqrt(3))))


def alice_ket(z1, a, offset=0.0):
    phi = alice_angle(z1, offset)
    return np.array([1, (-1) ** a * np.exp(-1j * phi)]) / math.sqrt(2)


def bob_ket(beta, b, chi=0.0):
    theta = bob_angle(beta)
    if b == 0:
        return np.array([math.cos(theta), np.exp(1j * chi) * math.sin(theta)])
    return np.array([math.sin(theta), -np.exp(1j * chi) * math.cos(theta)])


@dataclass(frozen=True)
class EaracStrategy:
    """One member of the reflection families.

    ``phi_prime`` rotates Bob's basis phase when ``x2 = 1``;
    ``alice_phase_offset`` adds a constant to Alice's angle for every input.
    ``decoder_flip`` inverts Charlie's answer.
    """
    reflection: str = 'XY'
    phi_prime: float = 0.0
    alice_phase_offset: float = 0.0
    decoder_flip: int = 0

    def __post_init__(self):
        if self.reflection not in REFLECTION_FRAMES:
            raise InvalidStrategy('Unknown reflection {!r}, expected one of XY, XZ, YZ.'.format(self.reflection))
        if self.decoder_flip not in (0, 1):
            raise InvalidStrategy('decoder_flip must be 0 or 1.')
        for name in ('phi_prime', 'alice_phase_offset'):
            if not math.isfinite(getattr(self, name)):
                raise InvalidStrategy('{} must be finite.'.format(name))

    @property
    def shared_state(self):
        frame = np.kron(np.eye(4), REFLECTION_FRAMES[self.reflection])
        return frame @ GHZ

    def bob_phase(self, x2):
        return -self.phi_prime if x2 else 0.0

    def to_json(self):
        return {
            'reflection': self.reflection,
            'phi_prime': self.phi_prime,
            'alice_phase_offset': self.alice_phase_offset,
            'decoder_flip': self.decoder_flip,
            }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                reflection=data.get('reflection', 'XY'),
                phi_prime=float(data.get('phi_prime', 0.0)),
                alice_phase_offset=float(data.get('alice_phase_offset', 0.0)),
                decoder_flip=int(data.get('decoder_flip', 0)),
                )
        except (TypeError, ValueError) as e:
            raise InvalidStrategy('Malformed EARAC strategy: {}'.format(e))


def _outcome_probability(state, alice, bob, charlie):
    amplitude = np.einsum('i,j,k,ijk->', alice.conj(), bob.conj(), charlie.conj(), state.reshape(2, 2, 2))
    return float(abs(amplitude) ** 2)


def guess_distribution(strategy, x0, x1, x2, y):
    """Probability that Charlie answers 1 on input ``x`` and question ``y``."""
    state = strategy.shared_state
    one = 0.0
    for a, b, c in itertools.product((0, 1), repeat=3):
        beta = a ^ x0 ^ x2
        p = _outcome_probability(
            state,
            alice_ket(x0 ^ x1, a, strategy.alice_phase_offset),
            bob_ket(beta, b, strategy.bob_phase(x2)),
            CHARLIE_KETS[y][c],
            )
        if a ^ x0 ^ b ^ c ^ strategy.decoder_flip:
            one += p
    return one


def earac_success_table(strategy, task):
    table = np.zeros((2, 2, 2, 3))
    for x in INPUTS:
        for y in QUESTIONS:
            one = guess_distribution(strategy, *x, y)
            table[x + (y,)] = one if task.f(*x, y) else 1 - one
    return table


def eval_earac(strategy, task):
    """Exact success probability of an EARAC strategy on ``task``."""
    value = average_success(task, np.clip(earac_success_table(strategy, task), 0, 1))
    logger.debug('EARAC %s value on %r: %.12f', strategy.reflection, task.label, value)
    return value


def earac_behavior(strategy):
    """``P(a, b, c | z1, z2, y)`` with ``z1 = x0 ⊕ x1`` and ``z2 = x0 ⊕ a ⊕ x2``.

    After the change of variables Alice's setting is ``z1`` and Bob's is
    ``z2``; the answer is correct iff ``x0 ⊕ a ⊕ b ⊕ c = f(x, y)``.
    Charlie's outcome carries the decoder flip. Bob's basis must not depend
    on ``x2`` beyond ``z2``, so ``phi_prime`` has to vanish modulo 2π.
    """
    if not math.isclose(math.remainder(strategy.phi_prime, 2 * math.pi), 0, abs_tol=1e-12):
        raise InvalidStrategy('Bob settings depend on x2 when phi_prime is not 0, no behavior exists.')
    state = strategy.shared_state

    def probability(a, b, c, z1, z2, y):
        return _outcome_probability(
            state,
            alice_ket(z1, a, strategy.alice_phase_offset),
            bob_ket(z2, b),
            CHARLIE_KETS[y][c ^ strategy.decoder_flip],
            )

    return Behavior.from_function(probability)


def ghz_decomposition_check(phi, theta):
    """Largest deviation between the GHZ state and its expansion in Alice and Bob's bases.

    Alice's basis is ``(|0⟩ ± e^{−iφ}|1⟩)/√2`` and Bob's is
    ``{cos θ|0⟩ + sin θ|1⟩, sin θ|0⟩ − cos θ|1⟩}``; Charlie's conditional
    states are written in closed form.
    """
    c, s = math.cos(theta), math.sin(theta)
    bob = (np.array([c, s]), np.array([s, -c]))
    total = np.zeros(8, dtype=complex)
    for a in (0, 1):
        sign = (-1) ** a * np.exp(1j * phi)
        alice = np.array([1, (-1) ** a * np.exp(-1j * phi)]) / math.sqrt(2)
        charlie = (np.array([c, sign * s]), np.array([s, -sign * c]))
        for b in (0, 1):
            total += np.kron(np.kron(alice, bob[b]), charlie[b]) / 2
    return float(np.max(np.abs(total - GHZ)))
