# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
Seeded generators for the random data fed to the property suites.

Every draw goes through a numpy Generator, so a property sees the same data
for the same seed whatever else runs before it.
"""
import zlib
from fractions import Fraction

import numpy as np

from gmcone.geometry.cone import (
    ZERO,
    Boundary,
    BoundaryPt,
    Interior,
    InteriorPt,
    ModelPoint,
)
from gmcone.geometry.foliation import MeasuredFoliation
from gmcone.geometry.numeric import as_number
from gmcone.geometry.teich import INFINITY, TeichPoint
from gmcone.geometry.walsh import Frame, Line


DENOMINATOR = 64

# Ext_i(p, q) = p^2 + q^2 is a perfect square on these slopes
PYTHAGOREAN_SLOPES = (
    (1, 0),
    (0, 1),
    (3, 4),
    (4, 3),
    (5, 12),
    (12, 5),
    (8, 15),
    (15, 8),
    (7, 24),
    (20, 21),
)


def property_rng(seed, property_id):
    return np.random.default_rng([seed, zlib.crc32(property_id.encode('utf-8'))])


def random_fraction(rng, low, high, denominator=DENOMINATOR):
    numerator = int(rng.integers(int(low * denominator), int(high * denominator) + 1))
    return as_number(Fraction(numerator, denominator))


def random_positive_fraction(rng, low, high, denominator=DENOMINATOR):
    value = random_fraction(rng, low, high, denominator)
    return value if value > 0 else Fraction(1, denominator)


def random_teich_point(rng, x_bound=3, y_low=0.25, y_high=4, exact=False):
    if exact:
        return TeichPoint(
            random_fraction(rng, -x_bound, x_bound),
            random_positive_fraction(rng, y_low, y_high),
        )
    return TeichPoint(
        float(rng.uniform(-x_bound, x_bound)),
        float(rng.uniform(y_low, y_high)),
    )


def random_integer_foliation(rng, bound=12):
    while True:
        a, b = (int(v) for v in rng.integers(-bound, bound + 1, size=2))
        if a or b:
            return MeasuredFoliation(a, b)


def random_rational_foliation(rng, bound=4):
    while True:
        F = MeasuredFoliation(random_fraction(rng, -bound, bound), random_fraction(rng, -bound, bound))
        if not F.is_zero:
            return F


def random_float_foliation(rng, bound=4.0):
    while True:
        a, b = (float(v) for v in rng.uniform(-bound, bound, size=2))
        if a or b:
            return MeasuredFoliation(a, b)


def random_pythagorean_foliation(rng, max_scale=3):
    p, q = PYTHAGOREAN_SLOPES[int(rng.integers(0, len(PYTHAGOREAN_SLOPES)))]
    scale = int(rng.integers(1, max_scale + 1))
    sign_p, sign_q = (1 if s else -1 for s in rng.integers(0, 2, size=2))
    return MeasuredFoliation(sign_p * scale * p, sign_q * scale * q)


def random_slope(rng, max_denominator=12, infinity_rate=0.1):
    if rng.random() < infinity_rate:
        return INFINITY
    q = int(rng.integers(1, max_denominator + 1))
    p = int(rng.integers(-2 * max_denominator, 2 * max_denominator + 1))
    return as_number(Fraction(p, q))


def random_cone_point(rng, exact=False, zero_rate=0.0):
    if zero_rate and rng.random() < zero_rate:
        return ZERO
    if rng.random() < 0.5:
        if exact:
            return Interior(random_positive_fraction(rng, 0.25, 4), random_teich_point(rng, exact=True))
        return Interior(float(rng.uniform(0.25, 4)), random_teich_point(rng))
    if exact:
        return Boundary(random_integer_foliation(rng))
    return Boundary(random_float_foliation(rng))


def random_closure_point(rng, interior_rate=0.5):
    if rng.random() < interior_rate:
        return InteriorPt(random_teich_point(rng))
    return BoundaryPt(random_float_foliation(rng))


def random_model_point(rng, t_low=0.25, t_high=4.0, interior_rate=0.5):
    return ModelPoint(float(rng.uniform(t_low, t_high)), random_closure_point(rng, interior_rate))


def random_walsh_point(rng, max_frame=30, line_bound=35, frame_rate=0.6):
    if rng.random() < frame_rate:
        n = int(rng.integers(1, max_frame + 1))
        return Frame(n, random_fraction(rng, 0, 4 * n, denominator=4))
    return Line(random_fraction(rng, -line_bound, line_bound, denominator=4))
