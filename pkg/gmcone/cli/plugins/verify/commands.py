# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import os

import click

from gmcone.cli.core import command
from gmcone.cli.core.config import pass_config
from gmcone.cli.core.terminal import console
from gmcone.cli.core.utils import validate_output_file
from gmcone.cli.plugins.verify.helpers import print_summary, run_suite, write_report
from gmcone.cli.plugins.verify.registry import ALL_SUITES, SUITES


@command(
    name='verify',
    short_help='Run a property verification suite.',
)
@click.option(
    '--suite',
    '-S',
    'suite',
    type=click.Choice(SUITES + (ALL_SUITES,)),
    default=ALL_SUITES,
    show_default=True,
    help='Suite of properties to check.',
)
@click.option(
    '--tol',
    'tolerance',
    type=click.FloatRange(min=0, min_open=True),
    help='Tolerance scaling every floating point threshold (default 1e-9).',
)
@click.option(
    '--trials',
    'trials',
    type=click.IntRange(1),
    help='Base number of random trials per property.',
)
@click.option(
    '--seed',
    'seed',
    type=click.IntRange(0),
    help='Seed of every random draw.',
)
@click.option(
    '--out',
    '-o',
    'output_file',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
    help='Output JSON report.',
)
@pass_config
@click.pass_context
def cmd_verify(ctx, config, suite, tolerance, trials, seed, output_file):
    config.override(tolerance=tolerance, trials=trials, seed=seed, output=output_file)
    config.validate()
    run = config.run
    output_file = validate_output_file(
        run.output or os.path.join(os.getcwd(), f'gmcli_verify_{suite}.json'),
    )

    report = run_suite(run, suite)
    write_report(report, output_file)
    print_summary(report)
    console.secho(f'\nThe report has been written to {output_file}.', fg='blue')
    if not report.passed:
        ctx.exit(1)


def get_command():
    return cmd_verify
