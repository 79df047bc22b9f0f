# -*- coding: utf-8 -*-
from django.core.exceptions import ValidationError


class NotHermitian(ValidationError):
    pass


class NormViolation(ValidationError):
    pass


class LpShapeError(ValidationError):
    pass


class NoConvergence(RuntimeError):
    pass
