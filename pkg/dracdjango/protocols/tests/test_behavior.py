# -*- coding: utf-8 -*-
import numpy as np
from django.test import SimpleTestCase

from ..behavior import SHAPE, Behavior, weighted_success
from ..exceptions import InvalidStrategy


class TestBehavior(SimpleTestCase):

    def test_uniform(self):
        behavior = Behavior.uniform()
        self.assertEqual(behavior.no_signaling_residual(), 0)
        self.assertAlmostEqual(weighted_success(behavior), 0.5)

    def test_deterministic(self):
        behavior = Behavior.deterministic(0, 0, 0)
        self.assertEqual(behavior(0, 0, 0, 1, 0, 2), 1)
        self.assertEqual(behavior.no_signaling_residual(), 0)

    def test_signaling(self):
        # Alice answers Bob's input.
        behavior = Behavior.from_function(lambda a, b, c, z1, z2, y: float(a == z2 and b == 0 and c == 0))
        self.assertAlmostEqual(behavior.no_signaling_residual(), 1)

    def test_marginal_shape(self):
        self.assertEqual(Behavior.uniform().marginal('AB').shape, (2, 2, 2, 2, 3))

    def test_not_normalized(self):
        with self.assertRaises(InvalidStrategy):
            Behavior(np.zeros(SHAPE))

    def test_wrong_shape(self):
        with self.assertRaises(InvalidStrategy):
            Behavior(np.full((2, 2, 2, 2, 2, 2), 1 / 8))
