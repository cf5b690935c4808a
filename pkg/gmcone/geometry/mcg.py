# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
The extended mapping class group GL(2, Z) of the torus.

An integer matrix acts on foliations linearly and on the upper half-plane by
tau -> (a tau - b) / (-c tau + d), the convention making extremal length
invariant: Ext_{A tau}(A F) = Ext_tau(F). Orientation reversing classes are
factored through the reflection R = diag(1, -1), acting as tau -> -conj(tau).
"""
import math
from dataclasses import dataclass
from typing import Tuple

from gmcone.geometry.cone import (
    ZERO,
    Boundary,
    ConePoint,
    Interior,
)
from gmcone.geometry.exceptions import InvalidMappingClassError
from gmcone.geometry.foliation import MeasuredFoliation
from gmcone.geometry.numeric import Number, ratio
from gmcone.geometry.teich import INFINITY, TeichPoint


@dataclass(frozen=True)
class MappingClass:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not all(isinstance(v, int) for v in (self.a, self.b, self.c, self.d)):
            raise InvalidMappingClassError('mapping classes are integer matrices.')
        if abs(self.det) != 1:
            raise InvalidMappingClassError(
                f'[[{self.a},{self.b}],[{self.c},{self.d}]] has determinant {self.det}.',
            )

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: 'MappingClass') -> 'MappingClass':
        return MappingClass(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> 'MappingClass':
        det = self.det
        return MappingClass(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d


IDENTITY = MappingClass(1, 0, 0, 1)
S = MappingClass(0, -1, 1, 0)
T = MappingClass(1, 1, 0, 1)
T_INV = MappingClass(1, -1, 0, 1)
R = MappingClass(1, 0, 0, -1)

GENERATORS = {
    'S': S,
    'T': T,
    't': T_INV,
    'R': R,
}


def from_word(word: str) -> MappingClass:
    result = IDENTITY
    for letter in word:
        try:
            result = result @ GENERATORS[letter]
        except KeyError:
            raise InvalidMappingClassError(f'unknown generator `{letter}` in word `{word}`.')
    return result


def random_word(rng, max_length: int = 8) -> Tuple[str, MappingClass]:
    """Seeded word of length at most max_length in S, T, T^-1 and R."""
    letters = sorted(GENERATORS)
    length = int(rng.integers(0, max_length + 1))
    word = ''.join(letters[int(i)] for i in rng.integers(0, len(letters), size=length))
    return word, from_word(word)


def act_on_foliation(A: MappingClass, F: MeasuredFoliation) -> MeasuredFoliation:
    return MeasuredFoliation(A.a * F.a + A.b * F.b, A.c * F.a + A.d * F.b)


def _mobius(A: MappingClass, x: Number, y: Number) -> TeichPoint:
    # (a tau - b) / (-c tau + d), expanded to keep rational input rational
    re = A.a * x - A.b
    den_re = A.d - A.c * x
    den = den_re * den_re + A.c * A.c * y * y
    return TeichPoint(
        ratio(re * den_re - A.a * A.c * y * y, den),
        ratio(y * A.det, den),
    )


def act_on_teich(A: MappingClass, tau: TeichPoint) -> TeichPoint:
    if A.det == 1:
        return _mobius(A, tau.x, tau.y)
    return _mobius(A @ R, -tau.x, tau.y)


def act_on_cone(A: MappingClass, cone_point: ConePoint) -> ConePoint:
    if isinstance(cone_point, Interior):
        return Interior(cone_point.scale, act_on_teich(A, cone_point.point))
    if isinstance(cone_point, Boundary):
        return Boundary(act_on_foliation(A, cone_point.foliation))
    return ZERO


def act_on_ideal_point(A: MappingClass, r: Number) -> Number:
    """The action induced on the ideal boundary, r -> (a r - b) / (-c r + d)."""
    if r == INFINITY or (isinstance(r, float) and math.isinf(r)):
        return INFINITY if A.c == 0 else ratio(-A.a, A.c)
    den = A.d - A.c * r
    if den == 0:
        return INFINITY
    return ratio(A.a * r - A.b, den)
