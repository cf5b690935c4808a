# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
Dual exact/binary64 arithmetic shared by the geometry modules.

Integers and fractions flow through every closed form untouched, so that
zero tests (null spaces, self intersections, Walsh identities) are exact.
As soon as a float enters, the result is a float.
"""
import math
from fractions import Fraction
from numbers import Integral, Rational, Real
from typing import Callable, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from gmcone.geometry.exceptions import InvalidSamplingError


Number = Union[int, Fraction, float]

REL_TOL = 1e-12
DEFAULT_SAMPLES = 4096
MIN_SAMPLES = 16
REFINE_XATOL = 1e-10


def as_number(value) -> Number:
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, Fraction):
        return value if value.denominator != 1 else int(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        parsed = Fraction(value.strip())
        return parsed if parsed.denominator != 1 else int(parsed)
    if isinstance(value, Real):
        return float(value)
    raise TypeError(f'{value!r} is not a real number.')


def is_exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def ratio(numerator: Number, denominator: Number) -> Number:
    if is_exact(numerator, denominator):
        return as_number(Fraction(numerator) / Fraction(denominator))
    return numerator / denominator


def exact_sqrt(value: Number) -> Number:
    """
    Square root that stays rational when the argument is the square of a
    rational number, e.g. 25 -> 5 and 9/4 -> 3/2.
    """
    if value < 0:
        raise ValueError('square root of a negative number.')
    if is_exact(value):
        frac = Fraction(value)
        num_root = math.isqrt(frac.numerator)
        den_root = math.isqrt(frac.denominator)
        if num_root * num_root == frac.numerator and den_root * den_root == frac.denominator:
            return as_number(Fraction(num_root, den_root))
        return math.sqrt(frac)
    return math.sqrt(value)


def isclose(a: Number, b: Number, rel_tol: float = REL_TOL, abs_tol: float = 0.0) -> bool:
    if is_exact(a, b):
        return a == b
    return math.isclose(float(a), float(b), rel_tol=rel_tol, abs_tol=abs_tol)


def relative_error(value: Number, expected: Number) -> float:
    if is_exact(value, expected) and value == expected:
        return 0.0
    diff = abs(float(value) - float(expected))
    scale = max(abs(float(expected)), 1.0)
    return diff / scale


def slope_angles(samples: int) -> np.ndarray:
    """Uniform grid over the half circle; foliations F and -F share a slope."""
    return np.pi * np.arange(samples) / samples


def slope_circle_sup(
    objective: Callable[[np.ndarray], np.ndarray],
    samples: int = DEFAULT_SAMPLES,
    xatol: float = REFINE_XATOL,
) -> Tuple[float, float]:
    """
    Maximize a pi-periodic function of the slope angle.

    The objective is evaluated on a uniform grid, the best cell is refined
    with a bounded scalar search. Returns the supremum and its angle.
    """
    if samples < MIN_SAMPLES:
        raise InvalidSamplingError(f'at least {MIN_SAMPLES} samples are required, got {samples}.')
    thetas = slope_angles(samples)
    values = np.asarray(objective(thetas), dtype=float)
    best = int(np.argmax(values))
    best_value = float(values[best])
    best_theta = float(thetas[best])
    step = np.pi / samples

    refined = minimize_scalar(
        lambda theta: -float(objective(np.array([theta]))[0]),
        bounds=(best_theta - step, best_theta + step),
        method='bounded',
        options={'xatol': xatol},
    )
    if refined.success and -refined.fun > best_value:
        best_value = float(-refined.fun)
        best_theta = float(refined.x) % np.pi
    return best_value, best_theta


def format_number(value: Number) -> str:
    if isinstance(value, float):
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return f'{value:.17g}'
    return str(value)
