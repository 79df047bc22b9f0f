# -*- coding: utf-8 -*-
from ....racs.cube import enumerate_cube_rotations
from ....reports.base import ReportCommand
from ....reports.formatters import render
from ...ellipsoid import REFLECTIONS, check_reflection, check_rotation


class Command(ReportCommand):
    help = """Check whether a channel can move the x2 = 0 cube face onto its reflected or rotated image."""
    actions = ('check',)

    def add_command_arguments(self, parser):
        parser.add_argument('--reflection', choices=tuple(REFLECTIONS), help='Check one reflection only.')
        parser.add_argument(
            '--rotations', action='store_true', help='Also check the 15 cube rotations without a fixed vertex.'
            )

    def run(self, config, options):
        reflections = (options['reflection'],) if options['reflection'] else tuple(REFLECTIONS)
        rows = []
        for reflection in reflections:
            feasible, certificate = check_reflection(reflection)
            rows.append({'map': 'R_' + reflection, 'feasible': feasible, 'detail': certificate.describe()})
        if options['rotations']:
            for rotation in enumerate_cube_rotations():
                if rotation.admissible:
                    feasible, certificate = check_rotation(rotation)
                    rows.append({'map': rotation.label, 'feasible': feasible, 'detail': certificate.describe()})
        return render(rows, ('map', 'feasible', 'detail'), config.fmt)
