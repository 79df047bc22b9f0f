# -*- coding: utf-8 -*-


def gather(signatures):
    """Dispatch Celery signatures and return their results in submission order."""
    results = [signature.apply_async() for signature in signatures]
    return [result.get() for result in results]
