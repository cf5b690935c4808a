# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
Teichmueller space of the torus, realized as the upper half-plane.

Extremal length of a weighted slope F = (a, b) at tau = x + iy is the
quadratic form |a + b tau|^2 / y, whose Gram matrix M_tau has determinant 1.
The Teichmueller distance is defined through Kerckhoff's formula as half the
log of the largest eigenvalue of the pencil (M_tau1, M_tau2).
"""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from gmcone.geometry.exceptions import InvalidTeichPointError, ZeroFoliationError
from gmcone.geometry.foliation import MeasuredFoliation, normalize_projective
from gmcone.geometry.numeric import (
    Number,
    as_number,
    exact_sqrt,
    is_exact,
    ratio,
)


INFINITY = math.inf


@dataclass(frozen=True)
class TeichPoint:
    x: Number = 0
    y: Number = 1

    def __post_init__(self):
        object.__setattr__(self, 'x', as_number(self.x))
        object.__setattr__(self, 'y', as_number(self.y))
        if not self.y > 0:
            raise InvalidTeichPointError(f'imaginary part must be positive, got {self.y}.')

    @classmethod
    def from_complex(cls, z: complex) -> 'TeichPoint':
        return cls(z.real, z.imag)

    @classmethod
    def parse(cls, text: str) -> 'TeichPoint':
        """Parse `x,y`, components may be fractions such as `1/2`."""
        try:
            x, y = (part.strip() for part in text.split(','))
            return cls(as_number(x), as_number(y))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidTeichPointError(f'invalid point `{text}`: {e}')

    def as_complex(self) -> complex:
        return complex(float(self.x), float(self.y))

    @property
    def is_exact(self) -> bool:
        return is_exact(self.x, self.y)

    def to_json(self):
        return [_json(self.x), _json(self.y)]

    def __str__(self):
        return f'{self.x},{self.y}'


DEFAULT_BASEPOINT = TeichPoint(0, 1)


@dataclass(frozen=True)
class ExtremalForm:
    m11: Number
    m12: Number
    m22: Number

    @classmethod
    def of(cls, tau: TeichPoint) -> 'ExtremalForm':
        return cls(
            ratio(1, tau.y),
            ratio(tau.x, tau.y),
            ratio(tau.x * tau.x + tau.y * tau.y, tau.y),
        )

    @property
    def det(self) -> Number:
        return self.m11 * self.m22 - self.m12 * self.m12

    def matrix(self) -> np.ndarray:
        return np.array(
            [[float(self.m11), float(self.m12)], [float(self.m12), float(self.m22)]],
        )

    def __call__(self, F: MeasuredFoliation) -> Number:
        return self.m11 * F.a * F.a + 2 * self.m12 * F.a * F.b + self.m22 * F.b * F.b


@dataclass(frozen=True)
class KerckhoffSolution:
    eigenvalue: float
    maximizer: Optional[MeasuredFoliation]
    minimizer: Optional[MeasuredFoliation]
    isotropic: bool = False


def extremal_length(tau: TeichPoint, F: MeasuredFoliation) -> Number:
    re = F.a + F.b * tau.x
    im = F.b * tau.y
    return ratio(re * re + im * im, tau.y)


def extremal_length_on_circle(tau: TeichPoint, thetas: np.ndarray) -> np.ndarray:
    """Extremal lengths of the unit foliations (cos t, sin t)."""
    x, y = float(tau.x), float(tau.y)
    a, b = np.cos(thetas), np.sin(thetas)
    return ((a + b * x) ** 2 + (b * y) ** 2) / y


def _pencil_gap(tau1: TeichPoint, tau2: TeichPoint) -> Number:
    # trace of M_tau2^-1 M_tau1 minus 2
    dx = tau1.x - tau2.x
    dy = tau1.y - tau2.y
    return ratio(dx * dx + dy * dy, tau1.y * tau2.y)


def _eigenvalue_excess(tau1: TeichPoint, tau2: TeichPoint) -> float:
    # top eigenvalue of the pencil minus one
    gap = float(_pencil_gap(tau1, tau2))
    return gap / 2 + math.sqrt(gap * (gap + 4)) / 2


def kerckhoff_eigenvalue(tau1: TeichPoint, tau2: TeichPoint) -> float:
    return 1.0 + _eigenvalue_excess(tau1, tau2)


def teich_distance(tau1: TeichPoint, tau2: TeichPoint) -> float:
    return 0.5 * math.log1p(_eigenvalue_excess(tau1, tau2))


def hyperbolic_half_distance(tau1: TeichPoint, tau2: TeichPoint) -> float:
    gap = float(_pencil_gap(tau1, tau2))
    return 0.5 * float(np.arccosh(1 + gap / 2))


def _null_vector(form1: ExtremalForm, form2: ExtremalForm, excess: float):
    """Kernel of form1 - (1 + excess) * form2."""
    n11 = float(form1.m11 - form2.m11) - excess * float(form2.m11)
    n12 = float(form1.m12 - form2.m12) - excess * float(form2.m12)
    n22 = float(form1.m22 - form2.m22) - excess * float(form2.m22)
    if math.hypot(n11, n12) >= math.hypot(n12, n22):
        return MeasuredFoliation(-n12, n11)
    return MeasuredFoliation(n22, -n12)


def normalize_in_mf1(F: MeasuredFoliation, basepoint: TeichPoint = DEFAULT_BASEPOINT):
    """Scale F onto MF_1 = {Ext_x0 = 1} with the projective canonical sign."""
    F = normalize_projective(F)
    return F.scaled(ratio(1, exact_sqrt(extremal_length(basepoint, F))))


def kerckhoff_sup(
    tau1: TeichPoint,
    tau2: TeichPoint,
    basepoint: TeichPoint = DEFAULT_BASEPOINT,
) -> KerckhoffSolution:
    """
    Supremum of Ext_tau1(F) / Ext_tau2(F) over measured foliations.

    The maximizer and the minimizer are the generalized eigenvectors of the
    pencil, normalized into MF_1 at the basepoint. When tau1 == tau2 every
    foliation is optimal and the solution is flagged isotropic.
    """
    if tau1 == tau2:
        return KerckhoffSolution(1.0, None, None, isotropic=True)
    excess = _eigenvalue_excess(tau1, tau2)
    form1, form2 = ExtremalForm.of(tau1), ExtremalForm.of(tau2)
    maximizer = _null_vector(form1, form2, excess)
    minimizer = _null_vector(form1, form2, -excess / (1 + excess))
    return KerckhoffSolution(
        1.0 + excess,
        normalize_in_mf1(maximizer, basepoint),
        normalize_in_mf1(minimizer, basepoint),
    )


def gromov_product(basepoint: TeichPoint, y: TeichPoint, z: TeichPoint) -> float:
    product = 0.5 * (
        teich_distance(basepoint, y) + teich_distance(basepoint, z) - teich_distance(y, z)
    )
    return max(product, 0.0)


def orthogonal_pair(tau: TeichPoint, theta: float = 0.0) -> Tuple[MeasuredFoliation, ...]:
    """
    Horizontal and vertical foliations of e^{-2i theta} dz^2 at tau, the
    pairs for which Minsky's inequality is an equality.
    """
    x, y = float(tau.x), float(tau.y)
    pair = []
    for w in (complex(math.cos(theta), math.sin(theta)), complex(-math.sin(theta), math.cos(theta))):
        b = w.imag / y
        pair.append(MeasuredFoliation(w.real - b * x, b))
    return tuple(pair)


def boundary_point(F: MeasuredFoliation) -> Number:
    """Ideal point of the half-plane at which Ext(F) degenerates."""
    if F.is_zero:
        raise ZeroFoliationError()
    if F.b == 0:
        return INFINITY
    return ratio(-F.a, F.b)


def boundary_slope(r: Number, projective: bool = True) -> MeasuredFoliation:
    r = as_number(r)
    if r == INFINITY:
        F = MeasuredFoliation(1, 0)
    else:
        F = MeasuredFoliation(-r, 1)
    return normalize_projective(F) if projective else F


def geodesic_ray(tau0: TeichPoint, alpha: MeasuredFoliation, t: float) -> TeichPoint:
    """
    Point at Teichmueller distance t on the ray from tau0 whose vertical
    foliation is alpha. Ext(alpha) decays like e^{-2t} along the ray.
    """
    endpoint = boundary_point(alpha)
    z0 = tau0.as_complex()
    stretch = math.exp(2 * t)
    if endpoint == INFINITY:
        return TeichPoint(float(tau0.x), z0.imag * stretch)
    xi = float(endpoint)
    w0 = -1 / (z0 - xi)
    w = complex(w0.real, w0.imag * stretch)
    return TeichPoint.from_complex(xi - 1 / w)


def geodesic_endpoints(tau1: TeichPoint, tau2: TeichPoint) -> Tuple[Number, Number]:
    """Ideal endpoints of the complete geodesic through tau1 and tau2."""
    if tau1.x == tau2.x:
        return tau1.x, INFINITY
    x1, y1, x2, y2 = tau1.x, tau1.y, tau2.x, tau2.y
    center = ratio((x2 * x2 + y2 * y2) - (x1 * x1 + y1 * y1), 2 * (x2 - x1))
    radius = exact_sqrt((x1 - center) * (x1 - center) + y1 * y1)
    return center - radius, center + radius


def _json(value: Number):
    if isinstance(value, int) or not is_exact(value):
        return value
    return str(value)
