from django.apps import AppConfig


class ReportsConfig(AppConfig):
    name = 'dracdjango.reports'
