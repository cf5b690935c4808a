# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import json
import time
from dataclasses import dataclass, field
from typing import List

from gmcone.cli.core.constants import REPORT_SCHEMA_VERSION
from gmcone.cli.core.terminal import console, verdict
from gmcone.cli.plugins.verify.registry import PropertyRecord, get_properties
from gmcone.cli.plugins.verify.sampling import property_rng
from gmcone.geometry.numeric import format_number


@dataclass
class VerifyReport:
    suite: str
    config: dict
    records: List[PropertyRecord] = field(default_factory=list)

    @property
    def passed(self):
        return all(record.passed for record in self.records)

    @property
    def failures(self):
        return [record for record in self.records if not record.passed]

    def to_json(self):
        return {
            'schema': REPORT_SCHEMA_VERSION,
            'suite': self.suite,
            'config': self.config,
            'passed': self.passed,
            'properties': [record.to_json() for record in self.records],
        }


def evaluate(prop, run):
    trials = prop.trials(run.trials)
    rng = property_rng(run.seed, prop.id)
    max_error = float(prop.check(run, rng, trials))
    threshold = prop.threshold(run.tolerance)
    passed = max_error == 0 if prop.exact else max_error <= threshold
    return PropertyRecord(
        id=prop.id,
        anchor=prop.anchor,
        trials=trials,
        max_error=max_error,
        threshold=threshold,
        exact=prop.exact,
        passed=passed,
    )


def run_suite(run, suite):
    properties = get_properties(suite)
    echo = {key: value for key, value in run.to_json().items() if key != 'output'}
    report = VerifyReport(suite=suite, config=echo)
    with console.progress() as progress:
        task = progress.add_task(f'Verifying suite {suite}', total=len(properties))
        for prop in properties:
            progress.update(task, description=f'Checking {prop.id}')
            started = time.perf_counter()
            record = evaluate(prop, run)
            console.debug(
                f'{prop.id}: {record.trials} trials in {time.perf_counter() - started:.3f}s',
            )
            report.records.append(record)
            progress.update(task, advance=1)
        progress.update(task, description=f'Verified suite {suite}')
    return report


def write_report(report, output_file):
    with open(output_file, 'w') as f:
        json.dump(report.to_json(), f, indent=4, sort_keys=True)
        f.write('\n')
    console.debug(f'report written to {output_file}')


def _caption(config):
    if not config:
        return None
    return f'seed {config["seed"]}, tolerance {config["tolerance"]}, base trials {config["trials"]}'


def print_summary(report):
    console.header(f'Suite {report.suite}')
    console.table(
        columns=(
            'Property',
            ('right', 'Trials'),
            ('right', 'Max error'),
            ('right', 'Threshold'),
            ('center', 'Result'),
        ),
        rows=[
            (
                record.id,
                record.trials,
                format_number(record.max_error),
                'exact' if record.exact else format_number(record.threshold),
                verdict(record.passed),
            )
            for record in report.records
        ],
        caption=_caption(report.config),
    )
    failures = report.failures
    if failures:
        console.secho(
            f'{len(failures)} of {len(report.records)} properties failed.',
            fg='red',
        )
    else:
        console.secho(f'All {len(report.records)} properties passed.', fg='green')
