# -*- coding: utf-8 -*-
"""No-signaling bilocal bounds of ``B(t, q)`` and the tripartite nonlocality witness.

Two parties share an arbitrary no-signaling box and the third answers
deterministically; shared randomness across the cut only mixes such
strategies, so the bound is the best LP value over the lone party's
deterministic responses.
"""
import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Tuple

import numpy as np
from scipy.optimize import brentq

from ..numerics.simplex import LpProblem, lp_maximize
from ..protocols.behavior import Behavior
from ..protocols.earac import EaracStrategy, earac_behavior
from ..racs.guessing import Q_MAX
from .exceptions import LpFailure, UnknownPartition
from .functional import (
    INPUT_SIZES, PARTIES, PARTITIONS, BellFunctional, Partition, bell_value, deterministic_responses, local_max,
    )

logger = logging.getLogger(__name__)

CERTIFY_TOL = 1e-9
THRESHOLD_XTOL = 1e-12
Q_STAR = (2 - math.sqrt(3)) / 3


def ns_pair_constraints(n_i, n_j):
    """Normalization and no-signaling equalities of a two party box.

    Variables are ``p(o_i, o_j | s_i, s_j)`` flattened in C order over
    ``(2, 2, n_i, n_j)``.
    """
    shape = (2, 2, n_i, n_j)
    size = int(np.prod(shape))
    rows, rhs = [], []

    def row(entries):
        coefficients = np.zeros(size)
        for index, value in entries:
            coefficients[np.ravel_multi_index(index, shape)] += value
        return coefficients

    for s_i, s_j in itertools.product(range(n_i), range(n_j)):
        rows.append(row(((o_i, o_j, s_i, s_j), 1.0) for o_i, o_j in itertools.product((0, 1), repeat=2)))
        rhs.append(1.0)
    # The marginal of i may not depend on s_j, and vice versa.
    for o_i, s_i, s_j in itertools.product((0, 1), range(n_i), range(1, n_j)):
        rows.append(row([((o_i, o_j, s_i, s_j), 1.0) for o_j in (0, 1)]
                        + [((o_i, o_j, s_i, 0), -1.0) for o_j in (0, 1)]))
        rhs.append(0.0)
    for o_j, s_j, s_i in itertools.product((0, 1), range(n_j), range(1, n_i)):
        rows.append(row([((o_i, o_j, s_i, s_j), 1.0) for o_i in (0, 1)]
                        + [((o_i, o_j, 0, s_j), -1.0) for o_i in (0, 1)]))
        rhs.append(0.0)
    return rows, rhs


def maximize_over_ns_pair(objective):
    """Maximize ``Σ objective · p`` over no-signaling boxes of shape ``objective.shape``."""
    n_i, n_j = objective.shape[2:]
    rows, rhs = ns_pair_constraints(n_i, n_j)
    solution = lp_maximize(LpProblem.build(objective.ravel(), rows, rhs))
    if not solution.is_optimal:
        raise LpFailure('No-signaling LP ended {}.'.format(solution.status))
    box = np.clip(np.array(solution.x).reshape(objective.shape), 0, None)
    return solution.value, box


@dataclass(frozen=True, eq=False)
class BilocalWitness:
    """Optimal bilocal strategy: a box for the pair, a fixed response for the lone party."""
    partition: Partition
    lone_response: Tuple[int, ...]
    box: np.ndarray

    def behavior(self):
        pair, lone = self.partition.pair, self.partition.lone
        n_k = INPUT_SIZES[lone]
        arranged = np.zeros(self.box.shape[:2] + (2,) + self.box.shape[2:] + (n_k,))
        for s_k, o_k in enumerate(self.lone_response):
            arranged[:, :, o_k, :, :, s_k] = self.box
        order = [PARTIES.index(p) for p in pair + (lone,)]
        permutation = order + [3 + i for i in order]
        return Behavior(np.transpose(arranged, np.argsort(permutation)))


def reduce_lone_party(arranged, response):
    """Sum the lone party out once its response to each input is fixed."""
    return sum(arranged[:, :, o_k, :, :, s_k] for s_k, o_k in enumerate(response))


def nsbl_max(functional, partition):
    """Largest ``B(t, q)`` reachable when ``partition.pair`` shares a no-signaling box."""
    if isinstance(partition, str):
        partition = Partition.from_label(partition)
    arranged = functional.arranged(partition)
    best, witness = -np.inf, None
    for response in deterministic_responses(INPUT_SIZES[partition.lone]):
        value, box = maximize_over_ns_pair(reduce_lone_party(arranged, response))
        if value > best + 1e-12:
            best, witness = value, BilocalWitness(partition, response, box)
    logger.debug('NSBL_%s bound of B(%d, %g): %.12f', ''.join(partition.pair), functional.t, functional.q, best)
    return best, witness


def ns22_vertices():
    """The 24 vertices of the two input, two output no-signaling polytope.

    Sixteen local deterministic boxes and eight PR boxes
    ``a ⊕ b = xy ⊕ αx ⊕ βy ⊕ γ``, indexed ``[vertex, a, b, x, y]``.
    """
    vertices = []
    for alpha, beta, gamma, delta in itertools.product((0, 1), repeat=4):
        box = np.zeros((2, 2, 2, 2))
        for x, y in itertools.product((0, 1), repeat=2):
            box[(alpha * x) ^ beta, (gamma * y) ^ delta, x, y] = 1
        vertices.append(box)
    for alpha, beta, gamma in itertools.product((0, 1), repeat=3):
        box = np.zeros((2, 2, 2, 2))
        for x, y, a in itertools.product((0, 1), repeat=3):
            box[a, a ^ (x * y) ^ (alpha * x) ^ (beta * y) ^ gamma, x, y] = 0.5
        vertices.append(box)
    return np.array(vertices)


def nsbl_max_by_vertices(functional, partition):
    """Same bound as :func:`nsbl_max` by enumerating the pair's polytope vertices.

    Only two input pairs have their vertices listed, i.e. ``AB|C``.
    """
    if isinstance(partition, str):
        partition = Partition.from_label(partition)
    if any(INPUT_SIZES[p] != 2 for p in partition.pair):
        raise UnknownPartition('Vertex enumeration needs a pair with two inputs each, not {}.'.format(
            partition.label))
    arranged = functional.arranged(partition)
    vertices = ns22_vertices()
    return max(
        float(np.max(np.tensordot(vertices, reduce_lone_party(arranged, response), axes=4)))
        for response in deterministic_responses(INPUT_SIZES[partition.lone])
        )


@functools.lru_cache(maxsize=1)
def _earac_behavior():
    return earac_behavior(EaracStrategy())


def quantum_value(functional):
    """``B(t, q)`` of the GHZ assisted protocol."""
    return bell_value(functional, _earac_behavior())


class BellBounds(NamedTuple):
    t: int
    q: float
    local: float
    nsbl_AB: float
    nsbl_AC: float
    nsbl_BC: float
    quantum: float


def bell_bounds(t, q):
    functional = BellFunctional(t, q)
    nsbl = {p.label: nsbl_max(functional, p)[0] for p in PARTITIONS}
    return BellBounds(
        t=t, q=q,
        local=local_max(functional)[0],
        nsbl_AB=nsbl['AB|C'], nsbl_AC=nsbl['AC|B'], nsbl_BC=nsbl['BC|A'],
        quantum=quantum_value(functional),
        )


class GmnWitness(NamedTuple):
    t: int
    quantum: float
    bound: float
    certified: bool


def _bipartition_bounds(q):
    """For each bipartition the smallest NSBL bound over ``t`` and the ``t`` reaching it."""
    bounds = {}
    for partition in PARTITIONS:
        values = [(nsbl_max(BellFunctional(t, q), partition)[0], t) for t in (0, 1)]
        bounds[partition.label] = min(values)
    return bounds


def gmn_witness(q):
    """Whether the quantum value of ``B(t, q)`` beats every bipartition for some ``t``.

    ``t`` may be chosen per bipartition; the reported bound is the largest of
    these per bipartition minima and ``t`` the choice that reaches it.
    """
    bound, t = max(_bipartition_bounds(q).values())
    quantum = quantum_value(BellFunctional(t, q))
    certified = quantum - bound > CERTIFY_TOL
    logger.info('GMN witness at q=%g: quantum %.9f, bound %.9f, certified=%s', q, quantum, bound, certified)
    return GmnWitness(t, quantum, bound, certified)


def gmn_margin(q):
    bound, t = max(_bipartition_bounds(q).values())
    return quantum_value(BellFunctional(t, q)) - bound


def gmn_threshold(xtol=THRESHOLD_XTOL):
    """Smallest ``q`` above which the quantum value witnesses tripartite nonlocality."""
    return brentq(gmn_margin, 0.0, Q_MAX, xtol=xtol)


def q_grid(qmin, qmax, steps):
    if steps < 1:
        return (qmin,)
    return tuple(qmin + (qmax - qmin) * i / steps for i in range(steps + 1))


def bell_scan(ts, qs, parallel=False):
    """Bounds for every ``(t, q)`` cell, ``t`` major."""
    cells = list(itertools.product(ts, qs))
    if parallel:
        from ..utils import gather
        from .tasks import scan_cell
        return [BellBounds(*row) for row in gather(scan_cell.s(t, q) for t, q in cells)]
    return [bell_bounds(t, q) for t, q in cells]
