# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import os

import click

from gmcone.cli.core import command
from gmcone.cli.core.config import pass_config
from gmcone.cli.core.terminal import console
from gmcone.cli.core.utils import point_option_callback, validate_output_file
from gmcone.cli.plugins.plot.helpers import (
    EMBEDDING,
    FIGURES,
    GEODESIC,
    embedding_scene,
    geodesic_scene,
    render,
    walsh_scene,
    write_svg,
)
from gmcone.geometry.teich import TeichPoint


@command(
    name='plot',
    short_help='Draw an SVG figure.',
)
@click.option(
    '--what',
    '-w',
    'figure',
    type=click.Choice(FIGURES),
    required=True,
    help='Figure to draw.',
)
@click.option(
    '--from',
    'start',
    callback=point_option_callback,
    help='First point of the geodesic (default: the basepoint).',
)
@click.option(
    '--to',
    'end',
    callback=point_option_callback,
    help='Second point of the geodesic (default: 2i).',
)
@click.option(
    '--frames',
    'frames',
    type=click.IntRange(1, 12),
    default=3,
    show_default=True,
    help='Number of frames of the walsh figure.',
)
@click.option(
    '--out',
    '-o',
    'output_file',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
    help='Output SVG file.',
)
@pass_config
def cmd_plot(config, figure, start, end, frames, output_file):
    basepoint = config.run.basepoint
    start = start or basepoint
    end = end or TeichPoint(0, 2)
    output_file = validate_output_file(
        output_file or os.path.join(os.getcwd(), f'gmcli_{figure}.svg'),
    )

    if figure == GEODESIC:
        scene = geodesic_scene(start, end)
    elif figure == EMBEDDING:
        scene = embedding_scene(basepoint, start, end)
    else:
        scene = walsh_scene(frames)

    write_svg(render(figure, scene), output_file)
    console.secho(f'The {figure} figure has been written to {output_file}.', fg='green')


def get_command():
    return cmd_plot
