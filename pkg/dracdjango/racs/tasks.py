# -*- coding: utf-8 -*-
from celery import shared_task

from .classical import search_encoders


@shared_task
def search_encoder_block(truth_table, weights, start, stop):
    """Search the encoders ``start`` to ``stop - 1`` of a classical strategy space."""
    return list(search_encoders(truth_table, weights, range(start, stop)))
