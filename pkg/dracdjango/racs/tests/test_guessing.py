# -*- coding: utf-8 -*-
import itertools
import json
import math
import os
import tempfile

import numpy as np
from django.test import SimpleTestCase

from ...numerics.linalg import state_to_bloch
from ..cube import eq1_signs
from ..exceptions import InvalidTask, ProbabilityOutOfRange, QOutOfRange, UnknownTask
from ..guessing import (
    INPUTS, Bias, TaskSpec, average_success, builtin_task, encoding_angles, encoding_state, load_task,
    table_one,
    )
from .factories import BiasFactory, TaskSpecFactory

SQRT3 = math.sqrt(3)


class TestEncodingState(SimpleTestCase):

    def test_first_vertex(self):
        np.testing.assert_allclose(state_to_bloch(encoding_state(0, 0, 0)), np.ones(3) / SQRT3, atol=1e-12)

    def test_x2_flips_z(self):
        np.testing.assert_allclose(
            state_to_bloch(encoding_state(0, 0, 1)), np.array([1, 1, -1]) / SQRT3, atol=1e-12
            )

    def test_vertices(self):
        for x in INPUTS:
            bloch = state_to_bloch(encoding_state(*x))
            np.testing.assert_allclose(bloch, np.array(eq1_signs(*x)) / SQRT3, atol=1e-12)
            self.assertTrue(bloch.is_pure())

    def test_pairwise_distances(self):
        vectors = [state_to_bloch(encoding_state(*x)).as_array() for x in INPUTS]
        allowed = (2 / SQRT3, 2 * math.sqrt(2) / SQRT3, 2)
        for u, v in itertools.combinations(vectors, 2):
            distance = np.linalg.norm(u - v)
            self.assertTrue(any(math.isclose(distance, d, abs_tol=1e-9) for d in allowed), distance)

    def test_angles(self):
        theta, phi = encoding_angles(0, 0, 0)
        self.assertAlmostEqual(math.cos(theta) ** 2, (SQRT3 + 1) / (2 * SQRT3))
        self.assertAlmostEqual(phi, math.pi / 4)


class TestAverageSuccess(SimpleTestCase):

    def setUp(self):
        self.task = TaskSpecFactory()

    def test_perfect(self):
        self.assertEqual(average_success(self.task, np.ones((2, 2, 2, 3))), 1)

    def test_random_guessing(self):
        self.assertAlmostEqual(average_success(self.task, lambda x0, x1, x2, y: 0.5), 0.5)

    def test_out_of_range(self):
        with self.assertRaises(ProbabilityOutOfRange):
            average_success(self.task, np.full((2, 2, 2, 3), 1.2))

    def test_biased_weights(self):
        task = TaskSpecFactory(bias=BiasFactory(t=0, q=0.1))
        only_last = np.zeros((2, 2, 2, 3))
        only_last[..., 2] = 1
        self.assertAlmostEqual(average_success(task, only_last), 1 / 3 - 0.2)
        self.assertAlmostEqual(sum(task.weights), 1)


class TestTaskSpec(SimpleTestCase):

    def test_wrong_size(self):
        with self.assertRaises(InvalidTask):
            TaskSpec((0,) * 23)

    def test_not_bits(self):
        with self.assertRaises(InvalidTask):
            TaskSpec((2,) + (0,) * 23)

    def test_bias_range(self):
        with self.assertRaises(QOutOfRange):
            Bias(0, 0.2)
        with self.assertRaises(QOutOfRange):
            Bias(2, 0.1)
        Bias(1, 1 / 6)

    def test_bias_weights(self):
        self.assertEqual(Bias(1, 0.1).weights, (1 / 3 + 0.1, 1 / 3 - 0.2, 1 / 3 + 0.1))

    def test_code(self):
        task = builtin_task(1)
        self.assertEqual(TaskSpec.from_code(task.code).truth_table, task.truth_table)
        with self.assertRaises(InvalidTask):
            TaskSpec.from_code(2 ** 24)

    def test_json(self):
        task = TaskSpecFactory(bias=Bias(1, 0.05))
        loaded = TaskSpec.from_json(json.loads(json.dumps(task.to_json())))
        self.assertEqual(loaded, task)
        from_code = TaskSpec.from_json({'label': 'coded', 'truth_table': task.code})
        self.assertEqual(from_code.truth_table, task.truth_table)
        with self.assertRaises(InvalidTask):
            TaskSpec.from_json({'label': 'empty'})

    def test_independence(self):
        for task in table_one():
            self.assertTrue(task.columns_independent(), task.label)
        repeated = TaskSpec.from_function(lambda x0, x1, x2: (x0, x0, x2))
        self.assertFalse(repeated.columns_independent())


class TestTableOne(SimpleTestCase):

    def test_rows(self):
        tasks = table_one()
        self.assertEqual(len(tasks), 8)
        self.assertEqual(tasks[0].column(0), tuple(x[0] for x in INPUTS))
        self.assertEqual(tasks[0].column(2), tuple(x[2] for x in INPUTS))
        self.assertEqual(tasks[4].column(0), tuple(x[0] ^ x[2] for x in INPUTS))
        self.assertEqual(tasks[6].column(2), tuple(x[0] for x in INPUTS))
        # Row 3 at x = 011: x0 ⊕ x2(x0 ⊕ x1) = 1, x1 ⊕ x2·¬(x0 ⊕ x1) = 1.
        self.assertEqual((tasks[2].f(0, 1, 1, 0), tasks[2].f(0, 1, 1, 1)), (1, 1))

    def test_codes_are_distinct(self):
        self.assertEqual(len({task.code for task in table_one()}), 8)

    def test_unknown_index(self):
        with self.assertRaises(UnknownTask):
            builtin_task(9)


class TestLoadTask(SimpleTestCase):

    def test_builtin(self):
        self.assertEqual(load_task('3'), builtin_task(3))

    def test_file(self):
        task = builtin_task(5)
        with tempfile.NamedTemporaryFile('w', suffix='.json', delete=False) as f:
            json.dump(task.to_json(), f)
        self.addCleanup(os.remove, f.name)
        self.assertEqual(load_task(f.name).truth_table, task.truth_table)

    def test_missing_file(self):
        with self.assertRaises(UnknownTask):
            load_task('/nonexistent/task.json')

    def test_bias_override(self):
        self.assertEqual(load_task('1', Bias(1, 0.1)).bias, Bias(1, 0.1))
