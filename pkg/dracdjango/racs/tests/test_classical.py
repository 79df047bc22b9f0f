# -*- coding: utf-8 -*-
from fractions import Fraction

import factory
import factory.random
from django.test import SimpleTestCase

from ..classical import ClassicalStrategy, classical_optimum, standard_rac_classical_optimum
from ..guessing import Bias, TaskSpec, average_success, builtin_task, table_one
from .factories import RandomTaskFactory

TABLE_ONE_OPTIMA = ((17, 24), (3, 4), (17, 24), (17, 24), (17, 24), (2, 3), (2, 3), (2, 3))


def permute_questions(task, order):
    return TaskSpec.from_function(
        lambda x0, x1, x2: tuple(task.f(x0, x1, x2, y) for y in order), task.label
        )


class TestClassicalOptimum(SimpleTestCase):

    def test_table_one(self):
        values = [classical_optimum(task)[0] for task in table_one()]
        self.assertEqual(values, [Fraction(n, d) for n, d in TABLE_ONE_OPTIMA])

    def test_relay_beats_two_thirds(self):
        # Send x0 ∧ x1, relay x2 only when that bit is 0.
        strategy = ClassicalStrategy(
            encoder=(0, 0, 0, 1), relay=(0, 1, 0, 0), decoder=(1, 1, 0, 0, 0, 1),
            )
        self.assertEqual(strategy.codes, (1, 4, 49))
        task = builtin_task(1)
        self.assertAlmostEqual(average_success(task, strategy.success_table(task)), 17 / 24)

    def test_witness_reaches_value(self):
        task = builtin_task(1)
        value, witness = classical_optimum(task)
        self.assertAlmostEqual(average_success(task, witness.success_table(task)), float(value))

    def test_constant_task(self):
        task = TaskSpec((0,) * 24, 'zero')
        value, witness = classical_optimum(task)
        self.assertEqual(value, 1)
        self.assertEqual(witness.codes, (0, 0, 0))

    def test_biased_task(self):
        task = builtin_task(1).with_bias(Bias(0, 0.1))
        value, witness = classical_optimum(task)
        self.assertIsInstance(value, float)
        self.assertAlmostEqual(average_success(task, witness.success_table(task)), value)
        self.assertGreaterEqual(value, 2 / 3)

    def test_parallel_matches_serial(self):
        for index in (1, 3, 7):
            task = builtin_task(index)
            self.assertEqual(classical_optimum(task, parallel=True), classical_optimum(task))

    def test_invariant_under_question_relabeling(self):
        factory.random.reseed_random('relabel')
        for task in RandomTaskFactory.build_batch(5):
            value, _ = classical_optimum(task)
            self.assertEqual(classical_optimum(permute_questions(task, (2, 0, 1)))[0], value)
            self.assertEqual(classical_optimum(permute_questions(task, (1, 0, 2)))[0], value)

    def test_invariant_under_question_dependent_flip(self):
        factory.random.reseed_random('flip')
        for task in RandomTaskFactory.build_batch(5):
            flipped = TaskSpec.from_function(
                lambda x0, x1, x2: (task.f(x0, x1, x2, 0) ^ 1, task.f(x0, x1, x2, 1), task.f(x0, x1, x2, 2) ^ 1)
                )
            self.assertEqual(classical_optimum(flipped)[0], classical_optimum(task)[0])


class TestClassicalStrategy(SimpleTestCase):

    def test_codes(self):
        strategy = ClassicalStrategy.from_codes(6, 9, 37)
        self.assertEqual(strategy.encoder, (0, 1, 1, 0))
        self.assertEqual(strategy.codes, (6, 9, 37))

    def test_message_chain(self):
        # Send x0 ⊕ x1, relay it unchanged, answer it for every question.
        strategy = ClassicalStrategy((0, 1, 1, 0), (0, 0, 1, 1), (0, 0, 0, 1, 1, 1))
        self.assertEqual(strategy.message(1, 0, 1), 1)
        self.assertEqual(strategy.answer(1, 1, 0, 2), 0)


class TestStandardRac(SimpleTestCase):

    def test_three_to_one(self):
        self.assertEqual(standard_rac_classical_optimum(), Fraction(3, 4))

    def test_constant(self):
        self.assertEqual(standard_rac_classical_optimum(TaskSpec((1,) * 24)), 1)

    def test_parity(self):
        parity = TaskSpec.from_function(lambda x0, x1, x2: (x0 ^ x1 ^ x2,) * 3)
        self.assertEqual(standard_rac_classical_optimum(parity), 1)
