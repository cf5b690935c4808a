import json

from gmcone.cli.plugins.verify.helpers import (
    VerifyReport,
    evaluate,
    print_summary,
    run_suite,
    write_report,
)
from gmcone.cli.plugins.verify.registry import Property, PropertyRecord


def _record(passed, exact=False):
    return PropertyRecord('x.y', 'anchor', 1, 0.0 if passed else 1.0, 1e-12, exact, passed)


def test_evaluate_passes_within_threshold(run_config):
    prop = Property('x.small', 'anchor', lambda run, rng, trials: 1e-13)

    record = evaluate(prop, run_config)

    assert record.passed is True
    assert record.trials == run_config.trials
    assert record.max_error == 1e-13


def test_evaluate_fails_above_threshold(run_config):
    prop = Property('x.large', 'anchor', lambda run, rng, trials: 1e-6)

    assert evaluate(prop, run_config).passed is False


def test_evaluate_exact_needs_zero(run_config):
    prop = Property('x.exact', 'anchor', lambda run, rng, trials: 1e-300, exact=True)

    record = evaluate(prop, run_config)

    assert record.passed is False
    assert record.threshold == 0.0


def test_evaluate_passes_rng_and_trials(mocker, run_config):
    check = mocker.MagicMock(return_value=0)
    prop = Property('x.mocked', 'anchor', check, trial_factor=0.5)

    evaluate(prop, run_config)

    run, rng, trials = check.call_args[0]
    assert run is run_config
    assert trials == 10
    assert rng is not None


def test_report_passed():
    report = VerifyReport(suite='walsh', config={})
    assert report.passed is True

    report.records.extend([_record(True), _record(False)])

    assert report.passed is False
    assert len(report.failures) == 1


def test_run_suite(mocker, run_config):
    mocker.patch(
        'gmcone.cli.plugins.verify.helpers.get_properties',
        return_value=[
            Property('x.one', 'anchor', lambda run, rng, trials: 0, exact=True),
            Property('x.two', 'anchor', lambda run, rng, trials: 1.0),
        ],
    )

    report = run_suite(run_config.override(output='out.json'), 'foliation')

    assert report.suite == 'foliation'
    assert 'output' not in report.config
    assert report.config['seed'] == 3
    assert [record.passed for record in report.records] == [True, False]


def test_write_report(fs):
    report = VerifyReport(suite='walsh', config={'seed': 0}, records=[_record(True, exact=True)])

    write_report(report, f'{fs.root_path}/report.json')

    content = fs.readtext('report.json')
    assert content.endswith('}\n')
    assert json.loads(content) == report.to_json()


def test_print_summary_failures(mocker):
    mocked_secho = mocker.patch('gmcone.cli.plugins.verify.helpers.console.secho')
    mocked_table = mocker.patch('gmcone.cli.plugins.verify.helpers.console.table')
    mocker.patch('gmcone.cli.plugins.verify.helpers.console.header')
    report = VerifyReport(suite='teich', config={}, records=[_record(True), _record(False)])

    print_summary(report)

    rows = mocked_table.call_args[1]['rows']
    assert [row[-1].plain for row in rows] == ['✔', '✖']
    assert mocked_table.call_args[1]['caption'] is None
    mocked_secho.assert_called_once_with('1 of 2 properties failed.', fg='red')


def test_print_summary_exact_threshold(mocker):
    mocked_table = mocker.patch('gmcone.cli.plugins.verify.helpers.console.table')
    mocker.patch('gmcone.cli.plugins.verify.helpers.console.header')
    mocked_secho = mocker.patch('gmcone.cli.plugins.verify.helpers.console.secho')
    report = VerifyReport(
        suite='walsh',
        config={'seed': 4, 'tolerance': 1e-9, 'trials': 50},
        records=[_record(True, exact=True)],
    )

    print_summary(report)

    assert mocked_table.call_args[1]['rows'][0][3] == 'exact'
    assert mocked_table.call_args[1]['caption'] == 'seed 4, tolerance 1e-09, base trials 50'
    mocked_secho.assert_called_once_with('All 1 properties passed.', fg='green')
