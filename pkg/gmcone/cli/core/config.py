# -*- coding: utf-8 -*-

# This file is part of the gmcone project.

import os
from dataclasses import asdict, dataclass, replace
from typing import Optional

import toml
from click import ClickException, make_pass_decorator

from gmcone.cli.core.constants import (
    CONFIG_FILE_NAME,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    DEFAULT_TRIALS,
    DEFAULT_TRUNCATION,
)
from gmcone.geometry.exceptions import GeometryError
from gmcone.geometry.teich import DEFAULT_BASEPOINT, TeichPoint


@dataclass(frozen=True)
class RunConfig:
    basepoint: TeichPoint = DEFAULT_BASEPOINT
    truncation: int = DEFAULT_TRUNCATION
    tolerance: float = DEFAULT_TOLERANCE
    samples: int = DEFAULT_SAMPLES
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    output: Optional[str] = None

    @classmethod
    def from_mapping(cls, data):
        values = dict(data)
        unknown = set(values) - set(cls.__dataclass_fields__)
        if unknown:
            raise ClickException(f'Unknown configuration keys: {", ".join(sorted(unknown))}.')
        basepoint = values.get('basepoint')
        try:
            if isinstance(basepoint, str):
                values['basepoint'] = TeichPoint.parse(basepoint)
            elif isinstance(basepoint, (list, tuple)):
                values['basepoint'] = TeichPoint(*basepoint)
        except (GeometryError, TypeError) as e:
            raise ClickException(f'Invalid basepoint in configuration: {e}')
        return cls(**values)

    def override(self, **values):
        return replace(self, **{k: v for k, v in values.items() if v is not None})

    def validate(self):
        for name in ('truncation', 'samples', 'trials'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ClickException(f'{name} must be a positive integer, got {value}.')
        if not self.tolerance > 0:
            raise ClickException(f'tolerance must be positive, got {self.tolerance}.')
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ClickException(f'seed must be a nonnegative integer, got {self.seed}.')

    def to_json(self):
        data = asdict(self)
        data['basepoint'] = str(self.basepoint)
        return data


class Config(object):
    def __init__(self):
        self._config_path = None
        self._run = RunConfig()

    @property
    def run(self):
        return self._run

    @property
    def config_path(self):
        return self._config_path

    def override(self, **values):
        self._run = self._run.override(**values)

    def load(self, config_dir):
        self._config_path = os.path.join(config_dir, CONFIG_FILE_NAME)
        if not os.path.isfile(self._config_path):
            return

        with open(self._config_path, 'r') as f:
            try:
                data = toml.load(f)
            except toml.TomlDecodeError as e:
                raise ClickException(f'Invalid configuration file {self._config_path}: {e}')
            self._run = RunConfig.from_mapping(data.get('run', {}))

    def store(self):
        data = self._run.to_json()
        if data['output'] is None:
            del data['output']
        with open(self._config_path, 'w') as f:
            f.write(toml.dumps({'run': data}))

    def validate(self):
        self._run.validate()


pass_config = make_pass_decorator(Config, ensure=True)
