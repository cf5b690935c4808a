import click
import pytest

from gmcone.cli.gmcli import main


def test_run_ok(mocker):
    mock_cli = mocker.patch('gmcone.cli.gmcli.cli', return_value=None)
    mock_load_plugins = mocker.patch('gmcone.cli.gmcli.load_plugins')

    with pytest.raises(SystemExit) as cv:
        main()

    assert cv.value.code == 0
    mock_load_plugins.assert_called_once_with(mock_cli)
    mock_cli.assert_called_once_with(prog_name='gmcli', standalone_mode=False)


def test_run_exit_code(mocker):
    mocker.patch('gmcone.cli.gmcli.cli', side_effect=click.exceptions.Exit(1))
    mocker.patch('gmcone.cli.gmcli.load_plugins')

    with pytest.raises(SystemExit) as cv:
        main()

    assert cv.value.code == 1


def test_run_click_exception(mocker):
    mock_cli = mocker.patch('gmcone.cli.gmcli.cli', side_effect=click.ClickException('test exc'))
    mock_load_plugins = mocker.patch('gmcone.cli.gmcli.load_plugins')
    mock_secho = mocker.patch('gmcone.cli.gmcli.click.secho')

    with pytest.raises(SystemExit) as cv:
        main()

    assert cv.value.code == 1
    mock_load_plugins.assert_called_once_with(mock_cli)
    mock_secho.assert_called_once_with('test exc', fg='red')


def test_run_abort_exception(mocker):
    mocker.patch('gmcone.cli.gmcli.cli', side_effect=click.exceptions.Abort('abort'))
    mocker.patch('gmcone.cli.gmcli.load_plugins')
    mock_secho = mocker.patch('gmcone.cli.gmcli.click.secho')

    with pytest.raises(SystemExit) as cv:
        main()

    assert cv.value.code == 1
    mock_secho.assert_not_called()
