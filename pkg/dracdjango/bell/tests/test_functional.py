# -*- coding: utf-8 -*-
import math

from django.test import SimpleTestCase

from ...protocols.behavior import Behavior
from ...protocols.earac import EaracStrategy, earac_behavior
from ...racs.exceptions import QOutOfRange
from ..exceptions import UnknownPartition
from ..functional import PARTITIONS, BellFunctional, Partition, bell_value, local_max

P_QUANTUM = (1 + math.sqrt(3)) / (2 * math.sqrt(3))
GRID = [(t, q) for t in (0, 1) for q in (0, 0.05, 0.1, 1 / 6)]


class TestBellValue(SimpleTestCase):

    def test_uniform_behavior(self):
        for t, q in GRID:
            self.assertAlmostEqual(bell_value(BellFunctional(t, q), Behavior.uniform()), 0.5)

    def test_deterministic_behavior(self):
        for t, q in GRID:
            functional = BellFunctional(t, q)
            w0, w1, w2 = functional.weights
            value = bell_value(functional, Behavior.deterministic(0, 0, 0))
            self.assertAlmostEqual(value, w0 + w1 / 2 + w2 / 2)

    def test_quantum_value_ignores_bias(self):
        behavior = earac_behavior(EaracStrategy())
        for t, q in GRID:
            self.assertAlmostEqual(bell_value(BellFunctional(t, q), behavior), P_QUANTUM, delta=1e-9)

    def test_q_out_of_range(self):
        with self.assertRaises(QOutOfRange):
            BellFunctional(0, 0.2)


class TestLocalMax(SimpleTestCase):

    def test_unbiased(self):
        value, witness = local_max(BellFunctional(0, 0))
        self.assertAlmostEqual(value, 2 / 3)
        alice, bob, charlie = witness
        self.assertEqual((len(alice), len(bob), len(charlie)), (2, 2, 3))

    def test_biased(self):
        self.assertAlmostEqual(local_max(BellFunctional(0, 0.1))[0], 2 / 3 + 0.05)
        self.assertAlmostEqual(local_max(BellFunctional(1, 1 / 6))[0], 0.75)

    def test_witness_reaches_value(self):
        functional = BellFunctional(1, 0.05)
        value, (alice, bob, charlie) = local_max(functional)
        behavior = Behavior.from_function(
            lambda a, b, c, z1, z2, y: float(a == alice[z1] and b == bob[z2] and c == charlie[y]))
        self.assertAlmostEqual(bell_value(functional, behavior), value)


class TestPartition(SimpleTestCase):

    def test_labels(self):
        self.assertEqual([p.label for p in PARTITIONS], ['AB|C', 'AC|B', 'BC|A'])
        self.assertEqual(Partition.from_label('BC|A').lone, 'A')

    def test_unknown(self):
        with self.assertRaises(UnknownPartition):
            Partition.from_label('ABC|')
