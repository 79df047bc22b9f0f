# -*- coding: utf-8 -*-
"""Tripartite behaviors ``P(a, b, c | z1, z2, y)``.

Alice holds input ``z1 ∈ {0, 1}``, Bob ``z2 ∈ {0, 1}`` and Charlie
``y ∈ {0, 1, 2}``; every party answers one bit. The table is stored as an
array indexed ``[a, b, c, z1, z2, y]``.
"""
import itertools
from dataclasses import dataclass

import numpy as np

from ..numerics.linalg import STRUCTURAL_TOL
from .exceptions import InvalidStrategy

SHAPE = (2, 2, 2, 2, 2, 3)
PARTIES = ('A', 'B', 'C')


@dataclass(frozen=True, eq=False)
class Behavior:
    table: np.ndarray

    def __post_init__(self):
        table = np.array(self.table, dtype=float)
        if table.shape != SHAPE:
            raise InvalidStrategy('A behavior has shape {}, got {}.'.format(SHAPE, table.shape))
        if np.any(table < -STRUCTURAL_TOL):
            raise InvalidStrategy('Behavior has negative probabilities.')
        if self.normalization_residual(table) > STRUCTURAL_TOL:
            raise InvalidStrategy('Behavior is not normalized.')
        table.setflags(write=False)
        object.__setattr__(self, 'table', table)

    @staticmethod
    def normalization_residual(table):
        return float(np.max(np.abs(table.sum(axis=(0, 1, 2)) - 1)))

    @classmethod
    def from_function(cls, probability):
        """Tabulate ``probability(a, b, c, z1, z2, y)``."""
        table = np.zeros(SHAPE)
        for index in itertools.product(*(range(n) for n in SHAPE)):
            table[index] = probability(*index)
        return cls(table)

    @classmethod
    def uniform(cls):
        return cls(np.full(SHAPE, 1 / 8))

    @classmethod
    def deterministic(cls, a, b, c):
        """Parties answer fixed bits whatever their inputs."""
        table = np.zeros(SHAPE)
        table[a, b, c] = 1
        return cls(table)

    def __call__(self, a, b, c, z1, z2, y):
        return float(self.table[a, b, c, z1, z2, y])

    def marginal(self, parties):
        """Marginal of ``parties`` (a subset of ``'ABC'``) at every input triple.

        The summed parties keep their input axes, so a no-signaling behavior
        gives a marginal that does not vary along them.
        """
        dropped = tuple(i for i, party in enumerate(PARTIES) if party not in parties)
        return self.table.sum(axis=dropped)

    def no_signaling_residual(self):
        """Largest change of any marginal under a change of a summed party's input."""
        residual = 0.0
        for kept in itertools.chain.from_iterable(itertools.combinations(PARTIES, n) for n in (1, 2)):
            marginal = self.marginal(kept)
            for i, party in enumerate(PARTIES):
                if party in kept:
                    continue
                # The input of party i sits after the kept outcome axes.
                axis = len(kept) + i
                spread = marginal.max(axis=axis) - marginal.min(axis=axis)
                residual = max(residual, float(np.max(spread)))
        return residual


def parity_holds(a, b, c, z1, z2, y):
    """Whether ``x0 ⊕ a ⊕ b ⊕ c = x_y`` once x is rewritten through ``z1`` and ``z2``."""
    if y == 0:
        return a ^ b ^ c == 0
    if y == 1:
        return a ^ b ^ c == z1
    return b ^ c == z2


def weighted_success(behavior, weights=(1 / 3, 1 / 3, 1 / 3)):
    """``(1/4) Σ_{z1, z2, y} w_y P(parity holds | z1, z2, y)``."""
    total = 0.0
    for index in itertools.product(*(range(n) for n in SHAPE)):
        if parity_holds(*index):
            total += weights[index[-1]] * behavior.table[index]
    return total / 4
