# -*- coding: utf-8 -*-
"""Tasks built from the symmetries of the cube.

Rotations that fix no vertex give tasks a qubit channel solves with the
optimal success probability; reflections give tasks that need the shared
GHZ state instead.
"""
import logging
import math

from ..protocols.earac import EaracStrategy, guess_distribution
from ..protocols.qrac import vertex_strategy
from .cube import default_assignment, derived_truth_table, find_rotation, is_complementary
from .exceptions import InadmissibleRotation, InvalidTask, UnknownTask
from .guessing import INPUTS, QUESTIONS, TaskSpec

logger = logging.getLogger(__name__)

PHI_PRIME_LABELS = {0.0: '', math.pi: 'R_Z(π)', math.pi / 2: 'R_Z(π/2)', 3 * math.pi / 2: 'R_Z(3π/2)'}
FAMILY_AXES = {'XY': 'Z', 'XZ': 'Y', 'YZ': 'X'}
DECISION_TOL = 1e-9

# How each reference task is reached with the optimal resource.
TABLE_ONE_RESOURCES = {
    1: ('EARAC', ('XY', 0.0)),
    2: ('EARAC', ('XY', math.pi)),
    3: ('EARAC', ('XY', math.pi / 2)),
    4: ('EARAC', ('XY', 3 * math.pi / 2)),
    5: ('QRAC', 'R_X(π)'),
    6: ('QRAC', 'R_X(3π/2)'),
    7: ('QRAC', 'R_X(π/2)'),
    8: ('QRAC', 'R_Z(π)'),
    }


def build_qrac_task(rotation, assignment=None):
    """Task and qubit strategy of an admissible rotation.

    Inputs with ``x2 = 0`` are prepared on the vertices of ``assignment``
    (the default one when omitted), inputs with ``x2 = 1`` on their images.
    """
    if not rotation.admissible:
        raise InadmissibleRotation('{} fixes a vertex of the cube.'.format(rotation.label))
    if assignment is None:
        assignment = default_assignment(rotation)
    else:
        assignment = tuple(tuple(int(s) for s in signs) for signs in assignment)
        if len(assignment) != 4 or not is_complementary(rotation, assignment):
            raise InadmissibleRotation(
                '{} does not send the given vertices onto the other four.'.format(rotation.label)
                )
    task = TaskSpec(derived_truth_table(rotation, assignment), rotation.label)
    logger.debug('%s gives truth table %06x', rotation.label, task.code)
    return task, vertex_strategy(assignment, rotation)


def _phi_prime_label(reflection, phi_prime):
    for value, label in PHI_PRIME_LABELS.items():
        if math.isclose(phi_prime, value, abs_tol=1e-12):
            return label.replace('Z', FAMILY_AXES[reflection])
    return 'R_{}({:.6g})'.format(FAMILY_AXES[reflection], phi_prime)


def build_earac_task(reflection, phi_prime=0.0):
    """Task answered by the GHZ strategy of the given reflection family.

    The truth table is the most likely answer of the strategy for each
    ``(x, y)``.
    """
    strategy = EaracStrategy(reflection=reflection, phi_prime=phi_prime)
    table = []
    for x in INPUTS:
        for y in QUESTIONS:
            one = guess_distribution(strategy, *x, y)
            if abs(one - 0.5) <= DECISION_TOL:
                raise InvalidTask('φ′ = {} leaves the answer to {} undecided.'.format(phi_prime, x + (y,)))
            table.append(int(one > 0.5))
    label = ' '.join(part for part in ('R_' + reflection, _phi_prime_label(reflection, phi_prime)) if part)
    return TaskSpec(tuple(table), label), strategy


def optimal_resource(index):
    """``('EARAC' | 'QRAC', strategy)`` reaching the optimum on reference task ``index``."""
    if index not in TABLE_ONE_RESOURCES:
        raise UnknownTask('Built-in tasks are numbered 1 to 8, got {}.'.format(index))
    kind, argument = TABLE_ONE_RESOURCES[index]
    if kind == 'EARAC':
        return kind, build_earac_task(*argument)[1]
    return kind, build_qrac_task(find_rotation(argument))[1]
