from django.apps import AppConfig


class SeesawConfig(AppConfig):
    name = 'dracdjango.seesaw'
    verbose_name = 'See-saw optimization'
