from django.apps import AppConfig


class ChannelsConfig(AppConfig):
    name = 'dracdjango.channels'
    label = 'drac_channels'
