# -*- coding: utf-8 -*-
from django.core.exceptions import ValidationError


class UnknownAppendixTask(ValidationError):
    pass


class InvalidSeesawRun(ValidationError):
    pass
