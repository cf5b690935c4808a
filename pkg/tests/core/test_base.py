import click
import toml
from click.testing import CliRunner

from gmcone.cli.core.base import (
    GmCommand,
    cli,
    command,
    print_version,
)


def test_cli_confdir_exists(mocker, fs, gmcli):
    mocked_makedirs = mocker.patch('gmcone.cli.core.base.os.makedirs')
    fs.makedir('.gmcli')
    runner = CliRunner()
    runner.invoke(gmcli, ['-c', f'{fs.root_path}/.gmcli', 'plot', '--help'])
    mocked_makedirs.assert_not_called()


def test_cli_confdir_not_exists(mocker, fs, gmcli):
    mocked_makedirs = mocker.patch('gmcone.cli.core.base.os.makedirs')
    runner = CliRunner()
    runner.invoke(
        gmcli,
        ['-c', f'{fs.root_path}/.gmcli', 'plot', '--what', 'walsh', '--out', f'{fs.root_path}/w.svg'],
    )
    mocked_makedirs.assert_called_once_with(f'{fs.root_path}/.gmcli')


def test_cli_print_version(mocker, capsys):
    mocker.patch('gmcone.cli.core.base.get_version', return_value='1.0.0')

    ctx = mocker.MagicMock(resilient_parsing=False)
    print_version(ctx, 'version', True)

    captured = capsys.readouterr()
    assert 'Gardiner-Masur cone toolkit, version 1.0.0' in captured.out
    ctx.exit.assert_called_once()


def test_cli_print_version_not_requested(mocker):
    ctx = mocker.MagicMock(resilient_parsing=False)
    print_version(ctx, 'version', False)

    ctx.exit.assert_not_called()


def test_cli_invalid_basepoint(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        ['-c', f'{fs.root_path}/.gmcli', '-b', '0,-2', 'plot', '--what', 'walsh'],
    )

    assert result.exit_code == 2
    assert 'imaginary part must be positive' in result.output


def test_cli_verbose_prints_run_config(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        [
            '-c',
            f'{fs.root_path}/.gmcli',
            '-v',
            '-N',
            '7',
            'plot',
            '--what',
            'walsh',
            '--out',
            f'{fs.root_path}/walsh.svg',
        ],
    )

    assert result.exit_code == 0
    assert 'truncation = 7' in result.output
    assert 'basepoint = 0,1' in result.output


def test_cli_save_stores_the_resolved_run(fs, gmcli):
    config_dir = f'{fs.root_path}/.gmcli'
    plot_args = ['plot', '--what', 'walsh', '--out', f'{fs.root_path}/walsh.svg']
    runner = CliRunner()
    result = runner.invoke(gmcli, ['-c', config_dir, '-b', '1/2,2', '-N', '9', '--save', *plot_args])

    assert result.exit_code == 0
    stored = toml.loads(fs.readtext('.gmcli/config.toml'))
    assert stored['run']['basepoint'] == '1/2,2'
    assert stored['run']['truncation'] == 9
    assert 'output' not in stored['run']

    result = runner.invoke(gmcli, ['-c', config_dir, '-v', *plot_args])

    assert result.exit_code == 0
    assert 'truncation = 9' in result.output
    assert 'basepoint = 1/2,2' in result.output


def test_cli_without_save_writes_no_config(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        ['-c', f'{fs.root_path}/.gmcli', 'plot', '--what', 'walsh', '--out', f'{fs.root_path}/walsh.svg'],
    )

    assert result.exit_code == 0
    assert not fs.exists('.gmcli/config.toml')


def test_command_uses_gm_command():
    @command(name='sample')
    def sample():
        pass  # pragma: no cover

    assert isinstance(sample, GmCommand)
    assert isinstance(sample, click.Command)
