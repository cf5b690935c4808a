import os

import pytest
from fs.tempfs import TempFS

from gmcone.cli.core.config import RunConfig


CONFIG_DATA = """
[run]
basepoint = "1/2,3/2"
truncation = 12
tolerance = 1e-8
samples = 1024
trials = 40
seed = 7
"""


@pytest.fixture(scope='function')
def fs():
    return TempFS()


@pytest.fixture(scope='session', autouse=True)
def patch_console():
    os.environ['COLUMNS'] = '132'
    os.environ['NO_COLOR'] = '1'


@pytest.fixture(scope='session')
def gmcli():
    from gmcone.cli.core.base import cli
    from gmcone.cli.core.plugins import load_plugins

    load_plugins(cli)
    return cli


@pytest.fixture(scope='function')
def run_config():
    return RunConfig(truncation=8, samples=256, trials=20, seed=3)


@pytest.fixture(scope='function')
def config_mocker(mocker):
    mocker.patch('os.path.isfile', return_value=True)
    return mocker.patch(
        'gmcone.cli.core.config.open',
        mocker.mock_open(read_data=CONFIG_DATA),
    )


@pytest.fixture(scope='function')
def points_file():
    return os.path.join(os.path.dirname(__file__), 'fixtures', 'points.json')
