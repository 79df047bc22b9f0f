from django.apps import AppConfig


class RacsConfig(AppConfig):
    name = 'dracdjango.racs'
