# -*- coding: utf-8 -*-
"""The biased Bell expression ``B(t, q)`` on tripartite behaviors.

``B(t, q) = (1/4) Σ_{z1, z2, y} w_y P(parity holds | z1, z2, y)`` with the
question weights of :class:`~dracdjango.racs.guessing.Bias`. At ``q = 0``
it is the unbiased ``(1/12) Σ`` expression.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Tuple

import numpy as np

from ..protocols.behavior import SHAPE, parity_holds
from ..racs.guessing import Bias
from .exceptions import UnknownPartition

logger = logging.getLogger(__name__)

PARTIES = ('A', 'B', 'C')
# Inputs: z1 for Alice, z2 for Bob, y for Charlie.
INPUT_SIZES = {'A': 2, 'B': 2, 'C': 3}


class Partition(NamedTuple):
    """A bipartition: ``pair`` shares no-signaling resources, ``lone`` is alone."""
    pair: Tuple[str, str]
    lone: str

    @property
    def label(self):
        return '{}|{}'.format(''.join(self.pair), self.lone)

    @classmethod
    def from_label(cls, label):
        for partition in PARTITIONS:
            if partition.label == label:
                return partition
        raise UnknownPartition('Unknown bipartition {!r}, expected one of {}.'.format(
            label, ', '.join(p.label for p in PARTITIONS)))


PARTITIONS = (
    Partition(('A', 'B'), 'C'),
    Partition(('A', 'C'), 'B'),
    Partition(('B', 'C'), 'A'),
    )


@dataclass(frozen=True, eq=False)
class BellFunctional:
    t: int = 0
    q: float = 0.0
    coefficients: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        weights = Bias(self.t, self.q).weights
        coefficients = np.zeros(SHAPE)
        for index in itertools.product(*(range(n) for n in SHAPE)):
            if parity_holds(*index):
                coefficients[index] = weights[index[-1]] / 4
        coefficients.setflags(write=False)
        object.__setattr__(self, 'coefficients', coefficients)

    @property
    def weights(self):
        return Bias(self.t, self.q).weights

    def arranged(self, partition):
        """Coefficients with axes ``[o_i, o_j, o_k, s_i, s_j, s_k]``, ``k`` the lone party."""
        order = [PARTIES.index(p) for p in partition.pair + (partition.lone,)]
        return np.transpose(self.coefficients, order + [3 + i for i in order])


def bell_value(functional, behavior):
    return float(np.sum(functional.coefficients * behavior.table))


def deterministic_responses(n_inputs):
    """Every map from ``n_inputs`` settings to one output bit."""
    return tuple(itertools.product((0, 1), repeat=n_inputs))


def local_max(functional):
    """Exact local bound by enumeration of the 4 × 4 × 8 deterministic strategies.

    Returns the value and the first maximizing ``(alice, bob, charlie)``
    response triple.
    """
    z1, z2, y = np.meshgrid(range(2), range(2), range(3), indexing='ij')
    best, witness = -np.inf, None
    for alice, bob, charlie in itertools.product(
            deterministic_responses(2), deterministic_responses(2), deterministic_responses(3)):
        a = np.asarray(alice)[z1]
        b = np.asarray(bob)[z2]
        c = np.asarray(charlie)[y]
        value = float(functional.coefficients[a, b, c, z1, z2, y].sum())
        if value > best + 1e-12:
            best, witness = value, (alice, bob, charlie)
    logger.debug('Local bound of B(%d, %g): %.12f', functional.t, functional.q, best)
    return best, witness
