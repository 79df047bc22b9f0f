# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from ..racs.guessing import Bias
from .exceptions import InvalidRunConfig
from .formatters import FORMATS, TEXT


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command invocation."""
    command: str
    action: Optional[str] = None
    task: Optional[str] = None
    t: Optional[int] = None
    q: Optional[float] = None
    restarts: int = 1
    seed: int = 0
    output: Optional[str] = None
    fmt: str = TEXT

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise InvalidRunConfig('Unknown output format {!r}.'.format(self.fmt))
        if self.restarts < 1:
            raise InvalidRunConfig('--restarts must be at least 1.')
        if self.seed < 0:
            raise InvalidRunConfig('--seed must be non negative.')
        if self.q is not None and self.t is None:
            raise InvalidRunConfig('--q needs --t.')

    @classmethod
    def from_options(cls, command, options):
        return cls(
            command=command,
            action=options.get('action'),
            task=options.get('task'),
            t=options.get('t'),
            q=options.get('q'),
            restarts=settings.SEESAW_RESTARTS if options.get('restarts') is None else options['restarts'],
            seed=settings.SEESAW_SEED if options.get('seed') is None else options['seed'],
            output=options.get('output'),
            fmt=options.get('fmt') or TEXT,
            )

    @property
    def bias(self):
        """Question bias of the task flags, None for the uniform task."""
        if self.q is None:
            return None
        return Bias(self.t, self.q)
