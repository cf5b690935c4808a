import os

import click

from gmcone import get_version
from gmcone.cli.core.config import Config, pass_config
from gmcone.cli.core.constants import DEFAULT_CONFIG_DIR
from gmcone.cli.core.terminal import console
from gmcone.cli.core.utils import point_option_callback


class GmCommand(click.Command):
    def invoke(self, ctx):
        config = ctx.ensure_object(Config)
        config.validate()
        for key, value in sorted(config.run.to_json().items()):
            console.debug(f'{key} = {value}')
        return super().invoke(ctx)


def command(name=None, **attrs):
    attrs.setdefault('cls', GmCommand)
    return click.command(name, **attrs)


def print_version(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    console.echo(f'Gardiner-Masur cone toolkit, version {get_version()}')
    ctx.exit()


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option(
    '--version',
    is_flag=True,
    expose_value=False,
    is_eager=True,
    callback=print_version,
)
@click.option(
    '-c',
    '--config-dir',
    default=DEFAULT_CONFIG_DIR,
    type=click.Path(file_okay=False),
    help='set the config directory.',
)
@click.option(
    '-s',
    '--silent',
    is_flag=True,
    help='Prevent the output of informational messages.',
)
@click.option(
    '-v',
    '--verbose',
    is_flag=True,
    help='Write verbose messages, including the resolved run configuration.',
)
@click.option(
    '--basepoint',
    '-b',
    'basepoint',
    callback=point_option_callback,
    help='Basepoint x0 of Teichmueller space as `x,y`.',
)
@click.option(
    '--truncation',
    '-N',
    'truncation',
    type=click.IntRange(1),
    help='Size of the curve family used by function vectors.',
)
@click.option(
    '--samples',
    'samples',
    type=click.IntRange(16),
    help='Number of slope angles used by supremum evaluations.',
)
@click.option(
    '--save',
    is_flag=True,
    help='Store the resolved run configuration in the config directory.',
)
@pass_config
@click.pass_context
def cli(ctx, config, config_dir, silent, verbose, basepoint, truncation, samples, save):
    """Gardiner-Masur cone toolkit for the torus"""
    if not os.path.exists(config_dir):
        os.makedirs(config_dir)
    config.load(config_dir)
    config.override(basepoint=basepoint, truncation=truncation, samples=samples)

    console.silent = silent
    console.verbose = verbose

    if save:
        config.validate()
        config.store()
        console.secho(f'Run configuration stored in {config.config_path}.', fg='green3')
