# -*- coding: utf-8 -*-
from celery import shared_task

from ..racs.guessing import TaskSpec
from .optimizer import run_restart


@shared_task
def run_restart_task(task, seed, restart, max_cycles=None):
    """One see-saw restart on a task given in its JSON form."""
    return run_restart(TaskSpec.from_json(task), seed, restart, max_cycles).to_json()
