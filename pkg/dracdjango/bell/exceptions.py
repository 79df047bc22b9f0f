# -*- coding: utf-8 -*-
from django.core.exceptions import ValidationError


class UnknownPartition(ValidationError):
    pass


class LpFailure(RuntimeError):
    pass
