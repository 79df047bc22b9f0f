from django.apps import AppConfig


class OpticsConfig(AppConfig):
    name = 'dracdjango.optics'
    verbose_name = 'Polarization optics'
