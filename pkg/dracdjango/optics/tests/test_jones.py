# -*- coding: utf-8 -*-
import math

import numpy as np
from django.test import SimpleTestCase

from ...numerics.linalg import IDENTITY, KET_PLUS, SIGMA_Z, fidelity, phase_insensitive_distance, rotation_unitary
from ..exceptions import InvalidPlate
from ..jones import WavePlate, hwp, output_ket, qwp, stack_unitary, waveplate_unitary


class TestWavePlate(SimpleTestCase):

    def test_half_wave_on_axis(self):
        np.testing.assert_allclose(waveplate_unitary(hwp(0)), SIGMA_Z, atol=1e-12)

    def test_half_wave_at_22_5(self):
        self.assertAlmostEqual(fidelity(KET_PLUS, output_ket([hwp(22.5)])), 1, delta=1e-12)

    def test_identity_stack(self):
        unitary = stack_unitary([qwp(45), hwp(-45), qwp(45)])
        self.assertLessEqual(phase_insensitive_distance(IDENTITY, unitary), 1e-12)

    def test_always_unitary(self):
        rng = np.random.default_rng(7)
        for kind, angle in zip(('half', 'quarter') * 20, rng.uniform(-180, 180, size=40)):
            unitary = waveplate_unitary(WavePlate(kind, float(angle)))
            np.testing.assert_allclose(unitary @ unitary.conj().T, IDENTITY, atol=1e-12)

    def test_invalid(self):
        with self.assertRaises(InvalidPlate):
            WavePlate('full', 0.0)
        with self.assertRaises(InvalidPlate):
            hwp(float('nan'))

    def test_str(self):
        self.assertEqual(str(qwp(-45)), 'QWP(-45°)')


class TestPreparationStack(SimpleTestCase):

    def test_phase_plate_combination(self):
        # QWP(45°), HWP(β), QWP(45°) is a Z rotation by π − 4β.
        for beta in (-56.25, -78.75, -101.25, -123.75, 10.0):
            unitary = stack_unitary([qwp(45), hwp(beta), qwp(45)])
            target = rotation_unitary((0, 0, 1), math.pi - 4 * math.radians(beta))
            self.assertLessEqual(phase_insensitive_distance(target, unitary), 1e-12)

    def test_prepared_ket(self):
        alpha, beta = 13.6839, -78.75
        ket = output_ket([hwp(alpha), qwp(45), hwp(beta), qwp(45)])
        phase = math.pi - 4 * math.radians(beta)
        expected = [math.cos(2 * math.radians(alpha)), np.exp(1j * phase) * math.sin(2 * math.radians(alpha))]
        self.assertAlmostEqual(fidelity(expected, ket), 1, delta=1e-12)
