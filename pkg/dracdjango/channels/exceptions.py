# -*- coding: utf-8 -*-
from django.core.exceptions import ValidationError


class InvalidChannel(ValidationError):
    pass


class InvalidState(ValidationError):
    pass


class UnknownReflection(ValidationError):
    pass
