import json

from click.testing import CliRunner


WALSH_IDS = [
    'walsh.metric-axioms',
    'walsh.dijkstra-oracle',
    'walsh.divergent-gromov',
    'walsh.anchor-distances',
    'walsh.busemann-sample',
]


def test_verify_walsh(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        [
            '-c',
            fs.root_path,
            'verify',
            '--suite',
            'walsh',
            '--trials',
            '10',
            '--out',
            f'{fs.root_path}/report.json',
        ],
    )

    assert result.exit_code == 0
    assert 'All 5 properties passed.' in result.output

    report = json.loads(fs.readtext('report.json'))
    assert report['schema'] == 1
    assert report['suite'] == 'walsh'
    assert report['passed'] is True
    assert 'output' not in report['config']
    assert report['config']['trials'] == 10
    assert report['config']['seed'] == 0
    assert report['config']['basepoint'] == '0,1'
    assert [prop['id'] for prop in report['properties']] == WALSH_IDS
    for prop in report['properties']:
        assert prop['exact'] is True
        assert prop['max_error'] == 0
        assert prop['threshold'] == 0


def test_verify_is_deterministic(fs, gmcli):
    runner = CliRunner()
    for name in ('first', 'second'):
        result = runner.invoke(
            gmcli,
            [
                '-c',
                fs.root_path,
                'verify',
                '--suite',
                'walsh',
                '--seed',
                '11',
                '--trials',
                '10',
                '--out',
                f'{fs.root_path}/{name}.json',
            ],
        )
        assert result.exit_code == 0

    assert fs.readbytes('first.json') == fs.readbytes('second.json')


def test_verify_tight_tolerance_fails(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        [
            '-c',
            fs.root_path,
            '--samples',
            '256',
            'verify',
            '--suite',
            'teich',
            '--tol',
            '1e-30',
            '--trials',
            '5',
            '--out',
            f'{fs.root_path}/report.json',
        ],
    )

    assert result.exit_code == 1
    assert 'properties failed.' in result.output
    report = json.loads(fs.readtext('report.json'))
    assert report['passed'] is False


def test_verify_default_output(mocker, fs, gmcli):
    mocker.patch('gmcone.cli.plugins.verify.commands.os.getcwd', return_value=fs.root_path)
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        ['-c', fs.root_path, 'verify', '--suite', 'walsh', '--trials', '5'],
    )

    assert result.exit_code == 0
    assert fs.exists('gmcli_verify_walsh.json')


def test_verify_invalid_output_dir(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        [
            '-c',
            fs.root_path,
            'verify',
            '--suite',
            'walsh',
            '--out',
            f'{fs.root_path}/missing/report.json',
        ],
    )

    assert result.exit_code == 1
    assert 'does not exist' in result.output


def test_verify_invalid_suite(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(gmcli, ['-c', fs.root_path, 'verify', '--suite', 'genus2'])

    assert result.exit_code == 2


def test_verify_silent(fs, gmcli):
    runner = CliRunner()
    result = runner.invoke(
        gmcli,
        [
            '-c',
            fs.root_path,
            '-s',
            'verify',
            '--suite',
            'walsh',
            '--trials',
            '5',
            '--out',
            f'{fs.root_path}/report.json',
        ],
    )

    assert result.exit_code == 0
    assert result.output == ''
