# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import os

import click

from gmcone.cli.core import command
from gmcone.cli.core.config import pass_config
from gmcone.cli.core.terminal import console
from gmcone.cli.core.utils import point_option_callback, slope_option_callback, validate_output_file
from gmcone.cli.plugins.converge.helpers import (
    DINF,
    MODES,
    RADIAL,
    dinf_rows,
    gromov_boundary_rows,
    radial_rows,
    write_rows,
)
from gmcone.geometry.teich import TeichPoint


DEFAULT_OTHER = TeichPoint(0, 2)


@command(
    name='converge',
    short_help='Tabulate a convergence experiment.',
)
@click.option(
    '--mode',
    '-m',
    'mode',
    type=click.Choice(MODES),
    required=True,
    help='Experiment to run.',
)
@click.option(
    '--point',
    '-p',
    'point',
    callback=point_option_callback,
    help='First interior point, or the start of the ray (default: the basepoint).',
)
@click.option(
    '--other',
    'other',
    callback=point_option_callback,
    help='Second interior point, or the point paired with the ray (default: 2i).',
)
@click.option(
    '--target',
    'target',
    default='inf',
    show_default=True,
    callback=slope_option_callback,
    help='Ideal point the ray converges to.',
)
@click.option(
    '--other-target',
    'other_target',
    default='0',
    show_default=True,
    callback=slope_option_callback,
    help='Second ideal point, used by the gromov-boundary mode.',
)
@click.option(
    '--t-max',
    't_max',
    type=click.FloatRange(min=0, min_open=True),
    default=20.0,
    show_default=True,
    help='Length of the ray.',
)
@click.option(
    '--steps',
    'steps',
    type=click.IntRange(1),
    default=20,
    show_default=True,
    help='Number of steps along the ray.',
)
@click.option(
    '--out',
    '-o',
    'output_file',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
    help='Output CSV file.',
)
@pass_config
def cmd_converge(config, mode, point, other, target, other_target, t_max, steps, output_file):
    run = config.run
    basepoint = run.basepoint
    point = point or basepoint
    other = other or DEFAULT_OTHER
    output_file = validate_output_file(
        output_file or os.path.join(os.getcwd(), f'gmcli_converge_{mode}.csv'),
    )

    if mode == DINF:
        if other == point:
            raise click.ClickException('The dinf experiment needs two distinct points.')
        rows = dinf_rows(point, other, run.truncation)
    elif mode == RADIAL:
        rows = radial_rows(basepoint, point, other, target, t_max, steps)
    else:
        if target == other_target:
            raise click.ClickException('The gromov-boundary experiment needs two distinct targets.')
        rows = gromov_boundary_rows(basepoint, target, other_target, t_max, steps)

    count = write_rows(mode, rows, output_file)
    console.secho(
        f'{count} rows of the {mode} experiment have been written to {output_file}.',
        fg='green',
    )


def get_command():
    return cmd_converge
