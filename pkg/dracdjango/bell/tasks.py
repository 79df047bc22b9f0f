# -*- coding: utf-8 -*-
from celery import shared_task

from .nsbl import bell_bounds


@shared_task
def scan_cell(t, q):
    """Local, bilocal and quantum values of ``B(t, q)`` as a JSON friendly list."""
    return list(bell_bounds(t, q))
