# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
Measured foliations on the torus.

A measured foliation is a weighted slope, i.e. a real pair (a, b) in the
first homology of the torus. Simple closed curves are the primitive integer
pairs, taken up to sign.
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from gmcone.geometry.exceptions import InvalidCurveClassError, ZeroFoliationError
from gmcone.geometry.numeric import (
    Number,
    as_number,
    exact_sqrt,
    is_exact,
    ratio,
)


@dataclass(frozen=True)
class MeasuredFoliation:
    a: Number = 0
    b: Number = 0

    def __post_init__(self):
        object.__setattr__(self, 'a', as_number(self.a))
        object.__setattr__(self, 'b', as_number(self.b))

    def __neg__(self):
        return MeasuredFoliation(-self.a, -self.b)

    def __iter__(self):
        yield self.a
        yield self.b

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_exact(self) -> bool:
        return is_exact(self.a, self.b)

    def scaled(self, factor: Number) -> 'MeasuredFoliation':
        factor = as_number(factor)
        return MeasuredFoliation(self.a * factor, self.b * factor)

    def as_array(self) -> np.ndarray:
        return np.array([float(self.a), float(self.b)])

    def to_json(self) -> List:
        return [_json_number(self.a), _json_number(self.b)]


ZERO_FOLIATION = MeasuredFoliation(0, 0)


@dataclass(frozen=True, order=True)
class CurveClass:
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise InvalidCurveClassError('curve classes have integer coordinates.')
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise InvalidCurveClassError(f'({self.p},{self.q}) is not primitive.')
        if not (self.q > 0 or (self.q == 0 and self.p == 1)):
            raise InvalidCurveClassError(f'({self.p},{self.q}) is not in canonical sign.')

    @classmethod
    def canonical(cls, p: int, q: int) -> 'CurveClass':
        g = math.gcd(abs(p), abs(q))
        if g == 0:
            raise InvalidCurveClassError('the zero pair is not a curve.')
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    def as_foliation(self) -> MeasuredFoliation:
        return MeasuredFoliation(self.p, self.q)

    def to_json(self) -> List[int]:
        return [self.p, self.q]


def intersection_number(F: MeasuredFoliation, G: MeasuredFoliation) -> Number:
    return abs(F.a * G.b - F.b * G.a)


def normalize_projective(F: MeasuredFoliation) -> MeasuredFoliation:
    if F.is_zero:
        raise ZeroFoliationError()
    norm = exact_sqrt(F.a * F.a + F.b * F.b)
    a, b = ratio(F.a, norm), ratio(F.b, norm)
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return MeasuredFoliation(a, b)


def projectively_equal(F: MeasuredFoliation, G: MeasuredFoliation, rel_tol: float = 1e-12):
    """Same point of PMF; F and -F are identified."""
    if F.is_zero or G.is_zero:
        raise ZeroFoliationError()
    cross = intersection_number(F, G)
    if is_exact(cross):
        return cross == 0
    scale = math.hypot(float(F.a), float(F.b)) * math.hypot(float(G.a), float(G.b))
    return cross <= rel_tol * scale


@lru_cache(maxsize=64)
def _curve_family(N: int) -> Tuple[CurveClass, ...]:
    curves = [
        CurveClass(p, q)
        for p in range(-N, N + 1)
        for q in range(0, N + 1)
        if math.gcd(abs(p), q) == 1 and (q > 0 or p == 1)
    ]
    return tuple(sorted(curves))


def curve_family(N: int) -> List[CurveClass]:
    if N < 1:
        raise InvalidCurveClassError(f'truncation must be a positive integer, got {N}.')
    return list(_curve_family(N))


def _json_number(value: Number):
    if isinstance(value, int):
        return value
    if is_exact(value):
        return str(value)
    return float(value)
