# -*- coding: utf-8 -*-
from django.core.exceptions import ValidationError


class InvalidTask(ValidationError):
    pass


class UnknownTask(ValidationError):
    pass


class ProbabilityOutOfRange(ValidationError):
    pass


class InadmissibleRotation(ValidationError):
    pass


class QOutOfRange(ValidationError):
    pass


class UnknownRotation(ValidationError):
    pass
