# -*- coding: utf-8 -*-
import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from .config import RunConfig
from .formatters import FORMATS, TEXT

logger = logging.getLogger(__name__)


class ReportCommand(BaseCommand):
    """Management command that renders its result as text, CSV or JSON.

    Subclasses list their ``actions``, add their own flags in
    ``add_command_arguments`` and return the rendered output from
    ``run(config, options)``. Validation errors exit with status 2.
    """
    actions = ()

    def add_arguments(self, parser):
        if self.actions:
            parser.add_argument('action', choices=self.actions)
        parser.add_argument('--format', dest='fmt', choices=FORMATS, default=TEXT)
        parser.add_argument('--output', help='Write the result to this file instead of stdout.')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        command = self.__module__.rsplit('.', 1)[-1]
        try:
            config = RunConfig.from_options(command, options)
            output = self.run(config, options)
        except ValidationError as e:
            raise CommandError('; '.join(e.messages), returncode=2)
        if config.output:
            with open(config.output, 'w') as f:
                f.write(output)
            logger.info('%s %s written to %s', command, config.action or '', config.output)
        else:
            self.stdout.write(output, ending='')

    def run(self, config, options):
        raise NotImplementedError
