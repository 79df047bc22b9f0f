# -*- coding: utf-8 -*-
"""Exhaustive search over classical deterministic strategies.

Shared randomness only mixes deterministic strategies and the success
probability is linear in the mixture, so the deterministic maximum is the
classical bound.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .guessing import INPUTS, QUESTIONS, builtin_task

logger = logging.getLogger(__name__)

ENCODERS = 16
RELAYS = 16
DECODERS = 64
SCORE_TOL = 1e-12
ENCODER_BLOCKS = 4


def _bits(code, width):
    return tuple(int(b) for b in format(code, '0{}b'.format(width)))


def _code(bits):
    return int(''.join(str(b) for b in bits), 2)


@dataclass(frozen=True)
class ClassicalStrategy:
    """Deterministic strategy of the three devices.

    ``encoder[2·x0 + x1]`` is the first message, ``relay[2·m1 + x2]`` the
    second one and ``decoder[3·m2 + y]`` the final answer.
    """
    encoder: Tuple[int, int, int, int]
    relay: Tuple[int, int, int, int]
    decoder: Tuple[int, int, int, int, int, int]

    @classmethod
    def from_codes(cls, encoder, relay, decoder):
        return cls(_bits(encoder, 4), _bits(relay, 4), _bits(decoder, 6))

    @property
    def codes(self):
        return _code(self.encoder), _code(self.relay), _code(self.decoder)

    def message(self, x0, x1, x2):
        return self.relay[2 * self.encoder[2 * x0 + x1] + x2]

    def answer(self, x0, x1, x2, y):
        return self.decoder[3 * self.message(x0, x1, x2) + y]

    def success_table(self, task):
        return [[int(self.answer(*x, y) == task.f(*x, y)) for y in QUESTIONS] for x in INPUTS]

    def to_json(self):
        return {'encoder': list(self.encoder), 'relay': list(self.relay), 'decoder': list(self.decoder)}


def _is_unbiased(weights):
    return weights is None


def _scores(truth_table, weights):
    """Per (x, y) contribution of a correct answer.

    Unbiased tasks count correct answers as integers so the optimum stays
    exact; biased ones use the float weight ``w_y / 8``.
    """
    if _is_unbiased(weights):
        return [1] * 24
    return [weights[i % 3] / 8 for i in range(24)]


def _greedy_decoder(messages, truth_table, scores):
    """Best decoder for fixed messages, ties answered with 0."""
    gains = [[[0, 0] for _ in QUESTIONS] for _ in (0, 1)]
    for index, m in enumerate(messages):
        for y in QUESTIONS:
            entry = 3 * index + y
            gains[m][y][truth_table[entry]] += scores[entry]
    decoder = []
    total = 0
    for m in (0, 1):
        for y in QUESTIONS:
            zero, one = gains[m][y]
            if one > zero + (0 if isinstance(one, int) else SCORE_TOL):
                decoder.append(1)
                total += one
            else:
                decoder.append(0)
                total += zero
    return total, _code(decoder)


def search_encoders(truth_table, weights, encoders):
    """Best (score, encoder, relay, decoder) over the given encoder codes.

    Candidates are visited in lexicographic order and replaced only on a
    strict improvement, so the witness is the smallest optimal triple.
    """
    scores = _scores(truth_table, weights)
    best = None
    for encoder, relay in itertools.product(encoders, range(RELAYS)):
        strategy = ClassicalStrategy.from_codes(encoder, relay, 0)
        messages = [strategy.message(*x) for x in INPUTS]
        total, decoder = _greedy_decoder(messages, truth_table, scores)
        if best is None or total > best[0] + (0 if isinstance(total, int) else SCORE_TOL):
            best = (total, encoder, relay, decoder)
    return best


def _merge(blocks):
    best = None
    for block in blocks:
        total = block[0]
        if best is None or total > best[0] + (0 if isinstance(total, int) else SCORE_TOL):
            best = block
    return best


def _encoder_blocks():
    size = ENCODERS // ENCODER_BLOCKS
    return [(start, start + size) for start in range(0, ENCODERS, size)]


def classical_optimum(task, parallel=False):
    """Exact classical optimum of ``task`` and its lexicographically smallest witness.

    The value is a :class:`~fractions.Fraction` for unbiased tasks and a
    float otherwise. With ``parallel`` the encoder range is split into
    blocks searched by the ``search_encoder_block`` Celery task.
    """
    weights = None if task.bias is None else list(task.weights)
    table = list(task.truth_table)
    if parallel:
        from ..utils import gather
        from .tasks import search_encoder_block
        blocks = gather(search_encoder_block.s(table, weights, start, stop) for start, stop in _encoder_blocks())
        best = _merge(tuple(block) for block in blocks)
    else:
        best = search_encoders(table, weights, range(ENCODERS))

    total, encoder, relay, decoder = best
    value = Fraction(total, 24) if _is_unbiased(weights) else float(total)
    logger.debug('Classical optimum of %r is %s', task.label, value)
    return value, ClassicalStrategy.from_codes(encoder, relay, decoder)


def standard_rac_classical_optimum(task=None):
    """Classical optimum of the non distributed 3→1 RAC.

    One device sees all of x and sends one bit; the default task asks for
    ``x_y``.
    """
    task = task or builtin_task(1)
    weights = None if task.bias is None else list(task.weights)
    table = list(task.truth_table)
    scores = _scores(table, weights)
    best = None
    for encoder in range(2 ** len(INPUTS)):
        messages = _bits(encoder, 8)
        total, _ = _greedy_decoder(messages, table, scores)
        if best is None or total > best + (0 if isinstance(total, int) else SCORE_TOL):
            best = total
    return Fraction(best, 24) if _is_unbiased(weights) else float(best)
