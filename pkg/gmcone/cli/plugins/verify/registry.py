# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import math
from dataclasses import dataclass
from typing import Callable, Dict, List

from gmcone.cli.core.constants import DEFAULT_TOLERANCE


SUITES = ('foliation', 'teich', 'cone', 'mcg', 'walsh')
ALL_SUITES = 'all'


@dataclass(frozen=True)
class Property:
    id: str
    anchor: str
    check: Callable
    bound: float = 1e-12
    exact: bool = False
    trial_factor: float = 1.0
    fixed_trials: int = 0

    def trials(self, base_trials):
        if self.fixed_trials:
            return self.fixed_trials
        return max(1, int(round(base_trials * self.trial_factor)))

    def threshold(self, tolerance):
        if self.exact:
            return 0.0
        return self.bound * (tolerance / DEFAULT_TOLERANCE)


@dataclass(frozen=True)
class PropertyRecord:
    id: str
    anchor: str
    trials: int
    max_error: float
    threshold: float
    exact: bool
    passed: bool

    def to_json(self):
        return {
            'id': self.id,
            'anchor': self.anchor,
            'trials': self.trials,
            'max_error': self.max_error if math.isfinite(self.max_error) else str(self.max_error),
            'threshold': self.threshold,
            'exact': self.exact,
            'passed': self.passed,
        }


_REGISTRY: Dict[str, List[Property]] = {suite: [] for suite in SUITES}


def register(suite, anchor, bound=1e-12, exact=False, trials=1.0, fixed=0):
    def decorator(fn):
        property_id = f'{suite}.{fn.__name__.removeprefix("check_").replace("_", "-")}'
        _REGISTRY[suite].append(
            Property(
                property_id,
                anchor,
                fn,
                bound=bound,
                exact=exact,
                trial_factor=trials,
                fixed_trials=fixed,
            ),
        )
        return fn

    return decorator


def get_properties(suite):
    # registration happens on import
    from gmcone.cli.plugins.verify import properties  # noqa: F401

    if suite == ALL_SUITES:
        return [prop for name in SUITES for prop in _REGISTRY[name]]
    return list(_REGISTRY[suite])


def worst(errors):
    """Largest error of a run, NaN counts as a failure."""
    result = 0.0
    for error in errors:
        error = float(error)
        if math.isnan(error):
            return math.inf
        result = max(result, error)
    return result
