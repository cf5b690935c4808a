from importlib.metadata import EntryPoint

import click

from gmcone.cli.core.constants import BUILTIN_PLUGINS
from gmcone.cli.core.plugins import load_plugins


def test_load_plugins(mocker):
    cli = click.Group()

    cmd_internal = click.Command('verify')
    grp_external = click.Group('external')

    mocker.patch.object(
        EntryPoint,
        'load',
        side_effect=[
            lambda: cmd_internal,
            lambda: grp_external,
        ],
    )
    mocker.patch(
        'gmcone.cli.core.plugins.iter_entry_points',
        return_value=iter(
            [
                EntryPoint('verify', 'gmcone.cli.plugins.verify.commands:get_command', None),
                EntryPoint('external', 'external.cli.plugin:get_group', None),
            ],
        ),
    )

    load_plugins(cli)

    assert cli.commands['verify'] is cmd_internal
    assert 'plugin' in cli.commands
    assert 'external' in cli.commands['plugin'].commands


def test_load_builtins_without_entry_points(mocker):
    cli = click.Group()
    mocker.patch(
        'gmcone.cli.core.plugins.iter_entry_points',
        return_value=iter([]),
    )

    load_plugins(cli)

    assert set(BUILTIN_PLUGINS) <= set(cli.commands)
    assert 'plugin' not in cli.commands
