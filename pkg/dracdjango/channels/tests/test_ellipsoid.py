# -*- coding: utf-8 -*-
import csv
import io
import itertools
import math

import numpy as np
from django.core.management import call_command
from django.test import SimpleTestCase

from ...numerics.linalg import random_unitary
from ...racs.cube import cube_vertex, default_assignment, enumerate_cube_rotations, find_rotation
from ..choi import ChoiMatrix, validate_choi
from ..ellipsoid import (
    EllipsoidParams, check_reflection, check_rotation, cp_necessary_condition, ellipsoid_params, reflection_face,
    reflection_feasibility,
    )
from ..exceptions import UnknownReflection

SQRT3 = math.sqrt(3)
REFLECTIONS = {
    'XY': np.diag([1, 1, -1]),
    'XZ': np.diag([1, -1, 1]),
    'YZ': np.diag([-1, 1, 1]),
    }


def face(axis):
    """The four cube vertices on the positive side of ``axis``."""
    return [v for v in itertools.product((1, -1), repeat=3) if v[axis] == 1]


def damping_channel(gamma, dephasing, rng):
    """Generalized damping sandwiched between random unitaries, offset along a principal axis."""
    lam = math.sqrt(1 - gamma) * dephasing
    inner = ChoiMatrix.from_affine(np.diag([lam, lam, 1 - gamma]), [0, 0, gamma])
    before, after = random_unitary(rng), random_unitary(rng)
    tensor = inner.matrix.reshape(2, 2, 2, 2)
    # Φ'(ρ) = A Φ(B ρ B†) A†
    rotated = np.einsum('ak,kilj,bl,ic,jd->acbd', after, tensor, after.conj(), before, before.conj())
    return ChoiMatrix(rotated.reshape(4, 4))


class TestEllipsoidParams(SimpleTestCase):

    def test_identity(self):
        params = ellipsoid_params(ChoiMatrix.identity())
        np.testing.assert_allclose(params.lambdas, (1, 1, 1), atol=1e-12)
        np.testing.assert_allclose(params.center, (0, 0, 0), atol=1e-12)

    def test_depolarizing(self):
        params = ellipsoid_params(ChoiMatrix.depolarizing())
        np.testing.assert_allclose(params.lambdas, (0, 0, 0), atol=1e-12)

    def test_amplitude_damping_round_trip(self):
        choi = ChoiMatrix.from_affine(np.diag([math.sqrt(0.5), math.sqrt(0.5), 0.5]), [0, 0, 0.5])
        params = ellipsoid_params(choi)
        np.testing.assert_allclose(sorted(np.abs(params.lambdas[:2])), [math.sqrt(0.5)] * 2, atol=1e-8)
        self.assertAlmostEqual(params.lambdas[2], 0.5, delta=1e-8)
        self.assertAlmostEqual(abs(params.center[2]), 0.5, delta=1e-8)
        self.assertTrue(params.offset_aligned)

    def test_unitary_channels(self):
        rng = np.random.default_rng(0)
        params = ellipsoid_params(ChoiMatrix.from_unitary(random_unitary(rng)))
        np.testing.assert_allclose(params.lambdas, (1, 1, 1), atol=1e-8)
        self.assertFalse(params.improper)

    def test_condition_holds_for_valid_channels(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            choi = damping_channel(rng.uniform(), rng.uniform(), rng)
            params = ellipsoid_params(choi)
            self.assertTrue(params.offset_aligned)
            self.assertTrue(cp_necessary_condition(params))

    def test_condition_holds_for_unital_channels(self):
        rng = np.random.default_rng(22)
        for _ in range(200):
            weights = rng.dirichlet(np.ones(3))
            kraus = [math.sqrt(w) * random_unitary(rng) for w in weights]
            self.assertTrue(cp_necessary_condition(ellipsoid_params(ChoiMatrix.from_kraus(kraus))))


class TestCpNecessaryCondition(SimpleTestCase):

    def test_unitary_equality(self):
        self.assertTrue(cp_necessary_condition(EllipsoidParams((1, 1, 1), (0, 0, 0))))

    def test_face_squeeze_fails(self):
        params = EllipsoidParams((math.sqrt(2 / 3), math.sqrt(2 / 3), 0.5), (0, 0, 1 / SQRT3))
        self.assertFalse(cp_necessary_condition(params))
        # The squeeze bound is tight at λ3 = √3 − 1.
        tight = EllipsoidParams((math.sqrt(2 / 3), math.sqrt(2 / 3), SQRT3 - 1), (0, 0, 1 / SQRT3))
        self.assertTrue(cp_necessary_condition(tight))

    def test_point_channel(self):
        self.assertTrue(cp_necessary_condition(EllipsoidParams((0, 0, 0), (0, 0, 0))))


class TestReflectionFeasibility(SimpleTestCase):

    def test_reflections_are_infeasible(self):
        for axis, reflection in zip((2, 1, 0), ('XY', 'XZ', 'YZ')):
            sources = np.array(face(axis)) / SQRT3
            targets = sources @ REFLECTIONS[reflection].T
            feasible, certificate = reflection_feasibility(targets, sources)
            self.assertFalse(feasible)
            self.assertAlmostEqual(certificate.required_lambda3, SQRT3 - 1, delta=1e-6)
            self.assertAlmostEqual(certificate.allowed_lambda3, 1 - 1 / SQRT3, delta=1e-6)
            self.assertIn('0.732', certificate.describe())
            self.assertIn('0.423', certificate.describe())

    def test_identity_is_feasible(self):
        sources = np.array(face(2)) / SQRT3
        feasible, certificate = reflection_feasibility(sources, sources)
        self.assertTrue(feasible)
        np.testing.assert_allclose(certificate.rotation, np.eye(3), atol=1e-9)

    def test_x_half_turn_certificate(self):
        sources = np.array(face(2)) / SQRT3
        targets = sources @ np.diag([1, -1, -1]).T
        feasible, certificate = reflection_feasibility(targets, sources)
        self.assertTrue(feasible)
        self.assertEqual(certificate.kind, 'rotation')
        output = certificate.choi.act(np.eye(2) / 2 + 0.5 * np.array([[0, 1], [1, 0]]))
        np.testing.assert_allclose(output, np.eye(2) / 2 + 0.5 * np.array([[0, 1], [1, 0]]), atol=1e-9)

    def test_admissible_rotations_are_feasible(self):
        admissible = [r for r in enumerate_cube_rotations() if r.admissible]
        self.assertEqual(len(admissible), 15)
        for rotation in admissible:
            sources = np.array([cube_vertex(v) for v in default_assignment(rotation)])
            targets = sources @ np.array(rotation.matrix).T
            feasible, _ = reflection_feasibility(targets, sources)
            self.assertTrue(feasible, rotation.label)


class TestNamedChecks(SimpleTestCase):

    def test_reflection_faces(self):
        for reflection in ('XY', 'XZ', 'YZ'):
            face_states = reflection_face(reflection)
            self.assertEqual(face_states.shape, (4, 3))
            flipped = 'XYZ'.index(next(a for a in 'XYZ' if a not in reflection))
            np.testing.assert_allclose(face_states[:, flipped], 1 / SQRT3)

    def test_check_reflection(self):
        for reflection in ('XY', 'XZ', 'YZ'):
            feasible, certificate = check_reflection(reflection)
            self.assertFalse(feasible)
            self.assertAlmostEqual(certificate.required_lambda3, SQRT3 - 1, delta=1e-6)

    def test_check_rotation(self):
        feasible, certificate = check_rotation(find_rotation('R_Z(π)'))
        self.assertTrue(feasible)
        self.assertTrue(validate_choi(certificate.choi).valid)

    def test_unknown_reflection(self):
        with self.assertRaises(UnknownReflection):
            reflection_face('XX')


class TestNogoCommand(SimpleTestCase):

    def test_single_reflection(self):
        out = io.StringIO()
        call_command('nogo', 'check', '--reflection', 'XY', stdout=out)
        self.assertIn('infeasible: λ₃ ∈ [0.732, ∞) required, ≤ 0.423 allowed', out.getvalue())

    def test_rotations(self):
        out = io.StringIO()
        call_command('nogo', 'check', '--rotations', '--format', 'csv', stdout=out)
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        self.assertEqual(len(rows), 18)
        self.assertEqual([row['feasible'] for row in rows].count('yes'), 15)
