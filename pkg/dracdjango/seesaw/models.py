# -*- coding: utf-8 -*-
from django.db import models

from ..protocols.qrac import QracStrategy
from ..racs.guessing import Bias, TaskSpec


class SeesawRun(models.Model):
    task_label = models.CharField(max_length=255, blank=True)
    task_code = models.PositiveIntegerField()
    t = models.PositiveSmallIntegerField(null=True, blank=True)
    q = models.FloatField(null=True, blank=True)
    restarts = models.PositiveIntegerField()
    seed = models.PositiveIntegerField(default=0)
    value = models.FloatField()
    cycles = models.PositiveIntegerField()
    strategy = models.JSONField()
    date = models.DateTimeField(auto_now_add=True)

    def __str__(self):
        return '{} ({} restarts, seed {}): {:.9f}'.format(
            self.task_label or self.task_code, self.restarts, self.seed, self.value
            )

    @classmethod
    def from_state(cls, state, task, restarts):
        """Unsaved run for the best restart ``state`` of a see-saw on ``task``."""
        return cls(
            task_label=task.label,
            task_code=task.code,
            t=task.bias.t if task.bias else None,
            q=task.bias.q if task.bias else None,
            restarts=restarts,
            seed=state.seed,
            value=state.value,
            cycles=state.cycles,
            strategy=state.strategy.to_json(),
            )

    @property
    def task(self):
        bias = Bias(self.t, self.q) if self.q is not None else None
        return TaskSpec.from_code(self.task_code, self.task_label, bias)

    def load_strategy(self):
        return QracStrategy.from_json(self.strategy)

    def save(self, *args, **kwargs):
        self.full_clean()
        super(SeesawRun, self).save(*args, **kwargs)

    class Meta:
        ordering = ['-date']
        verbose_name = 'See-saw run'
