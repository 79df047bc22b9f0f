# -*- coding: utf-8 -*-
import factory

from ...racs.constructions import build_qrac_task
from ...racs.cube import find_rotation
from ...racs.guessing import P_QUANTUM
from ..models import SeesawRun


class SeesawRunFactory(factory.django.DjangoModelFactory):
    """Run storing the exact R_X(π) strategy of task 5."""
    class Meta:
        model = SeesawRun

    task_label = 'x0+x2, x1, x2'
    task_code = factory.LazyFunction(lambda: build_qrac_task(find_rotation('R_X(π)'))[0].code)
    restarts = 1
    seed = factory.Sequence(lambda n: n)
    value = P_QUANTUM
    cycles = 1
    strategy = factory.LazyFunction(lambda: build_qrac_task(find_rotation('R_X(π)'))[1].to_json())
