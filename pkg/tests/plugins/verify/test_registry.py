import math

import pytest

from gmcone.cli.plugins.verify.registry import (
    ALL_SUITES,
    SUITES,
    Property,
    PropertyRecord,
    get_properties,
    worst,
)


def test_every_suite_has_properties():
    for suite in SUITES:
        properties = get_properties(suite)
        assert properties
        assert all(prop.id.startswith(f'{suite}.') for prop in properties)


def test_all_suites():
    properties = get_properties(ALL_SUITES)

    assert len(properties) == sum(len(get_properties(suite)) for suite in SUITES)
    assert len(properties) >= 25
    ids = [prop.id for prop in properties]
    assert len(ids) == len(set(ids))


def test_get_properties_returns_a_copy():
    get_properties('walsh').clear()

    assert get_properties('walsh')


@pytest.mark.parametrize(
    ('factor', 'fixed', 'base', 'expected'),
    (
        (1.0, 0, 500, 500),
        (0.4, 0, 500, 200),
        (0.01, 0, 20, 1),
        (1.0, 30, 500, 30),
    ),
)
def test_property_trials(factor, fixed, base, expected):
    prop = Property('x.y', 'anchor', lambda run, rng, trials: 0, trial_factor=factor, fixed_trials=fixed)

    assert prop.trials(base) == expected


def test_property_threshold():
    prop = Property('x.y', 'anchor', lambda run, rng, trials: 0, bound=1e-12)

    assert prop.threshold(1e-9) == pytest.approx(1e-12)
    assert prop.threshold(1e-6) == pytest.approx(1e-9)


def test_exact_property_threshold():
    prop = Property('x.y', 'anchor', lambda run, rng, trials: 0, exact=True)

    assert prop.threshold(1e-3) == 0.0


def test_worst():
    assert worst([]) == 0.0
    assert worst([1e-14, 3e-13, 0]) == 3e-13
    assert worst([1e-14, math.nan, 1.0]) == math.inf


def test_record_to_json_infinite_error():
    record = PropertyRecord('x.y', 'anchor', 3, math.inf, 1e-12, False, False)

    assert record.to_json() == {
        'id': 'x.y',
        'anchor': 'anchor',
        'trials': 3,
        'max_error': 'inf',
        'threshold': 1e-12,
        'exact': False,
        'passed': False,
    }
