# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import os

import click

from gmcone.cli.core import command
from gmcone.cli.core.config import pass_config
from gmcone.cli.core.terminal import console
from gmcone.cli.core.utils import validate_output_file
from gmcone.cli.plugins.pair.helpers import load_points, write_pairings


@command(
    name='pair',
    short_help='Tabulate the pairing of a list of cone points.',
)
@click.option(
    '--input',
    '-i',
    'input_file',
    required=True,
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
    help='JSON or YAML list of points.',
)
@click.option(
    '--out',
    '-o',
    'output_file',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
    help='Output CSV file.',
)
@pass_config
def cmd_pair(config, input_file, output_file):
    basepoint = config.run.basepoint
    if not output_file:
        name = os.path.splitext(os.path.basename(input_file))[0]
        output_file = os.path.join(os.getcwd(), f'{name}_pairing.csv')
    validate_output_file(output_file)

    points = load_points(basepoint, input_file)
    write_pairings(basepoint, points, output_file)
    console.secho(
        f'The pairing table of {len(points)} points has been written to {output_file}.',
        fg='green',
    )


def get_command():
    return cmd_pair
