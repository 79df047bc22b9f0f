# -*- coding: utf-8 -*-
from django.core.exceptions import ValidationError


class InvalidPlate(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class RangeError(ValidationError):
    pass


class LabelMismatch(ValidationError):
    pass
