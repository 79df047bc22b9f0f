# -*- coding: utf-8 -*-
import itertools
import math

import numpy as np
from django.test import SimpleTestCase

from ...racs.guessing import INPUTS, TaskSpec, builtin_task
from ..behavior import parity_holds, weighted_success
from ..earac import (
    EaracStrategy, bob_angle, earac_behavior, earac_success_table, eval_earac, ghz_decomposition_check,
    )
from ..exceptions import InvalidStrategy

P_QUANTUM = (1 + math.sqrt(3)) / (2 * math.sqrt(3))
PHASES = (0, math.pi, math.pi / 2, 1.5 * math.pi)


class TestGhzDecomposition(SimpleTestCase):

    def test_encoding_angles(self):
        self.assertLessEqual(ghz_decomposition_check(math.pi / 4, bob_angle(0)), 1e-9)

    def test_degenerate_angles(self):
        self.assertLessEqual(ghz_decomposition_check(0, 0), 1e-9)

    def test_any_angle(self):
        rng = np.random.default_rng(3)
        for phi, theta in rng.uniform(0, 2 * math.pi, size=(100, 2)):
            self.assertLessEqual(ghz_decomposition_check(phi, theta), 1e-9)


class TestEvalEarac(SimpleTestCase):

    def test_first_rows(self):
        self.assertAlmostEqual(eval_earac(EaracStrategy(), builtin_task(1)), P_QUANTUM, delta=1e-9)
        self.assertAlmostEqual(eval_earac(EaracStrategy(phi_prime=math.pi), builtin_task(2)), P_QUANTUM, delta=1e-9)

    def test_inverted_decoder(self):
        value = eval_earac(EaracStrategy(decoder_flip=1), builtin_task(1))
        self.assertAlmostEqual(value, 1 - P_QUANTUM, delta=1e-9)

    def test_every_term_is_optimal(self):
        table = earac_success_table(EaracStrategy(), builtin_task(1))
        np.testing.assert_allclose(table, P_QUANTUM, atol=1e-9)

    def test_rotation_tasks_are_out_of_reach(self):
        for index in (5, 6, 7, 8):
            for reflection, phi_prime in itertools.product(('XY', 'XZ', 'YZ'), PHASES):
                value = eval_earac(EaracStrategy(reflection, phi_prime), builtin_task(index))
                self.assertLess(value, P_QUANTUM - 1e-3)

    def test_alice_offset_reading(self):
        # A constant offset on the first angle turns every final state about Z, x2 = 0 included.
        task = TaskSpec.from_function(lambda x0, x1, x2: (x0 ^ 1, x1 ^ 1, x2))
        strategy = EaracStrategy(alice_phase_offset=math.pi)
        self.assertAlmostEqual(eval_earac(strategy, task), P_QUANTUM, delta=1e-9)

    def test_invalid(self):
        with self.assertRaises(InvalidStrategy):
            EaracStrategy(reflection='XX')
        with self.assertRaises(InvalidStrategy):
            EaracStrategy(decoder_flip=2)

    def test_json(self):
        strategy = EaracStrategy('YZ', math.pi / 2, 0.0, 1)
        self.assertEqual(EaracStrategy.from_json(strategy.to_json()), strategy)


class TestEaracBehavior(SimpleTestCase):

    def setUp(self):
        self.behavior = earac_behavior(EaracStrategy())

    def test_marginals(self):
        np.testing.assert_allclose(self.behavior.marginal('A'), 0.5, atol=1e-12)
        np.testing.assert_allclose(self.behavior.marginal('C'), 0.5, atol=1e-12)

    def test_no_signaling(self):
        self.assertLessEqual(self.behavior.no_signaling_residual(), 1e-9)

    def test_success_both_ways(self):
        task = builtin_task(1)
        self.assertAlmostEqual(weighted_success(self.behavior), eval_earac(EaracStrategy(), task), delta=1e-12)

    def test_success_from_inputs(self):
        # Sum over x with z1 = x0 ⊕ x1 and z2 = x0 ⊕ a ⊕ x2; flipping x0 is a relabeling.
        task = builtin_task(1)
        total = 0.0
        for x0, x1, x2 in INPUTS:
            for y, a, b, c in itertools.product(range(3), (0, 1), (0, 1), (0, 1)):
                if x0 ^ a ^ b ^ c == task.f(x0, x1, x2, y):
                    total += self.behavior(a, b, c, x0 ^ x1, x0 ^ a ^ x2, y)
        self.assertAlmostEqual(total / 24, P_QUANTUM, delta=1e-12)

    def test_x0_flip_relabeling(self):
        # Flipping x0 flips z1 and z2, so both halves of the input sum see every setting once.
        strategies = (
            EaracStrategy(), EaracStrategy('XZ'), EaracStrategy('YZ', decoder_flip=1),
            EaracStrategy(alice_phase_offset=0.3),
            )
        for strategy in strategies:
            behavior = earac_behavior(strategy)
            halves = [0.0, 0.0]
            for x0, x1, x2 in INPUTS:
                for y, a, b, c in itertools.product(range(3), (0, 1), (0, 1), (0, 1)):
                    z1, z2 = x0 ^ x1, x0 ^ a ^ x2
                    if parity_holds(a, b, c, z1, z2, y):
                        halves[x0] += behavior(a, b, c, z1, z2, y)
            self.assertAlmostEqual(halves[0], halves[1], delta=1e-12)
            self.assertAlmostEqual(halves[0], 12 * weighted_success(behavior), delta=1e-12)

    def test_parity_conditions(self):
        self.assertTrue(parity_holds(1, 1, 0, 0, 0, 0))
        self.assertTrue(parity_holds(1, 0, 0, 1, 0, 1))
        self.assertFalse(parity_holds(0, 1, 0, 1, 0, 2))

    def test_needs_input_free_bob(self):
        with self.assertRaises(InvalidStrategy):
            earac_behavior(EaracStrategy(phi_prime=math.pi))
