# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
The Gardiner-Masur cone of the torus.

A cone point is the vertex, a scaled interior point c * Phi(tau) or a
measured foliation. Model points (t, p) with p in the closure of
Teichmueller space are mapped into the cone by the basepoint lift Psi.
Everything else, the unified intersection number in particular, is
computed from the intrinsic cone representation.
"""
import enum
import math
from dataclasses import dataclass
from typing import (
    Dict,
    Iterable,
    List,
    Tuple,
    Union,
)

import numpy as np

from gmcone.geometry.exceptions import (
    FamilyMismatchError,
    InvalidNeighborhoodError,
    InvalidSamplingError,
    ZeroFoliationError,
)
from gmcone.geometry.foliation import (
    CurveClass,
    MeasuredFoliation,
    curve_family,
    intersection_number,
)
from gmcone.geometry.numeric import (
    DEFAULT_SAMPLES,
    REL_TOL,
    Number,
    as_number,
    exact_sqrt,
    is_exact,
    ratio,
    slope_circle_sup,
)
from gmcone.geometry.teich import (
    DEFAULT_BASEPOINT,
    TeichPoint,
    extremal_length,
    extremal_length_on_circle,
    teich_distance,
)


NEIGHBORHOOD_MIN_SAMPLES = 64


class ConePoint:
    def scaled(self, factor: Number) -> 'ConePoint':
        raise NotImplementedError()

    @property
    def is_zero(self) -> bool:
        return False


@dataclass(frozen=True)
class Zero(ConePoint):
    def scaled(self, factor):
        return self

    @property
    def is_zero(self):
        return True


@dataclass(frozen=True)
class Interior(ConePoint):
    scale: Number
    point: TeichPoint

    def __post_init__(self):
        object.__setattr__(self, 'scale', as_number(self.scale))
        if not self.scale > 0:
            raise ValueError(f'interior scale must be positive, got {self.scale}.')

    def scaled(self, factor):
        factor = as_number(factor)
        if factor == 0:
            return ZERO
        return Interior(self.scale * factor, self.point)


@dataclass(frozen=True)
class Boundary(ConePoint):
    foliation: MeasuredFoliation

    def __post_init__(self):
        if self.foliation.is_zero:
            raise ZeroFoliationError('boundary cone points carry a nonzero foliation.')

    def scaled(self, factor):
        factor = as_number(factor)
        if factor == 0:
            return ZERO
        return Boundary(self.foliation.scaled(factor))


ZERO = Zero()


@dataclass(frozen=True)
class InteriorPt:
    point: TeichPoint


@dataclass(frozen=True)
class BoundaryPt:
    foliation: MeasuredFoliation

    def __post_init__(self):
        if self.foliation.is_zero:
            raise ZeroFoliationError()


ClosurePoint = Union[InteriorPt, BoundaryPt]


@dataclass(frozen=True)
class ModelPoint:
    t: Number
    p: ClosurePoint

    def __post_init__(self):
        object.__setattr__(self, 't', as_number(self.t))
        if self.t < 0:
            raise ValueError(f'model points have a nonnegative radius, got {self.t}.')

    @property
    def is_vertex(self) -> bool:
        return self.t == 0

    def scaled(self, factor: Number) -> 'ModelPoint':
        return ModelPoint(self.t * as_number(factor), self.p)


@dataclass(frozen=True)
class FunctionVector:
    family: Tuple[CurveClass, ...]
    values: Tuple[Number, ...]

    def __post_init__(self):
        object.__setattr__(self, 'family', tuple(self.family))
        object.__setattr__(self, 'values', tuple(self.values))
        if len(self.family) != len(self.values):
            raise FamilyMismatchError('one value per curve class is required.')
        if any(v < 0 for v in self.values):
            raise ValueError('function vectors are nonnegative.')

    def __getitem__(self, curve: CurveClass) -> Number:
        return self.values[self.family.index(curve)]

    def as_dict(self) -> Dict[CurveClass, Number]:
        return dict(zip(self.family, self.values))

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def to_json(self) -> Dict:
        return {
            'family': [curve.to_json() for curve in self.family],
            'values': [v if isinstance(v, int) else float(v) for v in self.values],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'FunctionVector':
        return cls(
            tuple(CurveClass(int(p), int(q)) for p, q in data['family']),
            tuple(as_number(v) for v in data['values']),
        )


class Verdict(str, enum.Enum):
    INSIDE = 'inside'
    OUTSIDE = 'outside'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class Membership:
    verdict: Verdict
    margin: float
    supremum: float
    bound: float


def _exp_distance(tau1: TeichPoint, tau2: TeichPoint, factor: int = 1) -> Number:
    if tau1 == tau2:
        return 1
    return math.exp(factor * teich_distance(tau1, tau2))


def lift_phi(tau: TeichPoint) -> Interior:
    return Interior(1, tau)


def lift_psi(basepoint: TeichPoint, model: ModelPoint) -> ConePoint:
    if model.is_vertex:
        return ZERO
    if isinstance(model.p, InteriorPt):
        tau = model.p.point
        return Interior(ratio(model.t, _exp_distance(basepoint, tau)), tau)
    G = model.p.foliation
    return Boundary(G.scaled(ratio(model.t, exact_sqrt(extremal_length(basepoint, G)))))


def psi_inverse(basepoint: TeichPoint, cone_point: ConePoint) -> ModelPoint:
    if isinstance(cone_point, Interior):
        tau = cone_point.point
        return ModelPoint(cone_point.scale * _exp_distance(basepoint, tau), InteriorPt(tau))
    if isinstance(cone_point, Boundary):
        F = cone_point.foliation
        return ModelPoint(exact_sqrt(extremal_length(basepoint, F)), BoundaryPt(F))
    return ModelPoint(0, InteriorPt(basepoint))


def pairing_i(first: ConePoint, second: ConePoint) -> Number:
    """
    The intersection number extended to the whole cone.

    Interior points pair through exp(d_T), an interior point with a foliation
    through the square root of extremal length, two foliations through the
    geometric intersection number.
    """
    if first.is_zero or second.is_zero:
        return 0
    if isinstance(first, Boundary) and isinstance(second, Interior):
        first, second = second, first
    if isinstance(first, Interior):
        if isinstance(second, Interior):
            return first.scale * second.scale * _exp_distance(first.point, second.point)
        return first.scale * exact_sqrt(extremal_length(first.point, second.foliation))
    return intersection_number(first.foliation, second.foliation)


def pairing_i_based(basepoint: TeichPoint, first: ModelPoint, second: ModelPoint) -> Number:
    return pairing_i(lift_psi(basepoint, first), lift_psi(basepoint, second))


def ext_on_cone(y: TeichPoint, cone_point: ConePoint) -> Number:
    if isinstance(cone_point, Interior):
        return cone_point.scale * cone_point.scale * _exp_distance(y, cone_point.point, 2)
    if isinstance(cone_point, Boundary):
        return extremal_length(y, cone_point.foliation)
    return 0


def model_extremal_length(basepoint: TeichPoint, model: ModelPoint) -> Number:
    """Ext^{x0}_{x0} of a model point, equal to t^2."""
    return ext_on_cone(basepoint, lift_psi(basepoint, model))


def _pairing_on_circle(cone_point: ConePoint, thetas: np.ndarray) -> np.ndarray:
    """i(cone_point, (cos t, sin t)) for every angle t."""
    if isinstance(cone_point, Interior):
        return float(cone_point.scale) * np.sqrt(extremal_length_on_circle(cone_point.point, thetas))
    if isinstance(cone_point, Boundary):
        G = cone_point.foliation
        return np.abs(float(G.a) * np.sin(thetas) - float(G.b) * np.cos(thetas))
    return np.zeros_like(thetas)


def _kink_angles(*cone_points: ConePoint) -> List[float]:
    angles = []
    for cone_point in cone_points:
        if isinstance(cone_point, Boundary):
            G = cone_point.foliation
            angles.append(math.atan2(float(G.b), float(G.a)) % math.pi)
    return angles


def _sup_with_kinks(objective, samples: int, kinks: Iterable[float]) -> float:
    value, _ = slope_circle_sup(objective, samples)
    kinks = list(kinks)
    if kinks:
        value = max(value, float(np.max(objective(np.array(kinks)))))
    return value


def ext_sup_oracle(y: TeichPoint, cone_point: ConePoint, samples: int = DEFAULT_SAMPLES) -> float:
    """
    Extremal length as a supremum: sup_F i(a, F)^2 / Ext_y(F) over slopes.
    Approaches ext_on_cone from below.
    """

    def objective(thetas):
        return _pairing_on_circle(cone_point, thetas) ** 2 / extremal_length_on_circle(y, thetas)

    return _sup_with_kinks(objective, samples, _kink_angles(cone_point))


def e_function(basepoint: TeichPoint, p: ClosurePoint, F: MeasuredFoliation) -> Number:
    """The normalized Gardiner-Masur function of p evaluated at F."""
    if isinstance(p, InteriorPt):
        root = exact_sqrt(extremal_length(p.point, F))
        return ratio(root, _exp_distance(basepoint, p.point))
    G = p.foliation
    return ratio(intersection_number(F, G), exact_sqrt(extremal_length(basepoint, G)))


def e_extension(basepoint: TeichPoint, y: TeichPoint, model: ModelPoint) -> Number:
    """E_y extended to the model cone; symmetric on interior pairs."""
    return pairing_i_based(basepoint, ModelPoint(1, InteriorPt(y)), model)


def gm_gromov_product(basepoint: TeichPoint, p: ClosurePoint, q: ClosurePoint) -> float:
    value = pairing_i_based(basepoint, ModelPoint(1, p), ModelPoint(1, q))
    if value == 0:
        return math.inf
    return max(0.0, -0.5 * math.log(value))


def cone_to_function(cone_point: ConePoint, N: int) -> FunctionVector:
    family = curve_family(N)
    if isinstance(cone_point, Interior) and not (
        is_exact(cone_point.scale) and cone_point.point.is_exact
    ):
        p = np.array([curve.p for curve in family], dtype=float)
        q = np.array([curve.q for curve in family], dtype=float)
        x, y = float(cone_point.point.x), float(cone_point.point.y)
        values = float(cone_point.scale) * np.sqrt(((p + q * x) ** 2 + (q * y) ** 2) / y)
        return FunctionVector(tuple(family), tuple(float(v) for v in values))
    return FunctionVector(
        tuple(family),
        tuple(pairing_i(cone_point, Boundary(curve.as_foliation())) for curve in family),
    )


def model_to_function(basepoint: TeichPoint, model: ModelPoint, N: int) -> FunctionVector:
    return cone_to_function(lift_psi(basepoint, model), N)


def d_infinity(f: FunctionVector, g: FunctionVector) -> float:
    if f.family != g.family:
        raise FamilyMismatchError('function vectors live on different curve families.')
    fv = np.array([float(v) for v in f.values])
    gv = np.array([float(v) for v in g.values])
    f_zero, g_zero = fv == 0, gv == 0
    if np.any(f_zero != g_zero):
        return math.inf
    keep = ~f_zero
    if not np.any(keep):
        return 0.0
    ratios = np.maximum(fv[keep] / gv[keep], gv[keep] / fv[keep])
    return float(np.log(np.max(ratios)))


def null_test(
    first: ConePoint,
    second: ConePoint,
    tol: float = REL_TOL,
    basepoint: TeichPoint = DEFAULT_BASEPOINT,
) -> bool:
    """Whether second lies in the null space of first."""
    value = pairing_i(first, second)
    if (
        isinstance(first, Boundary)
        and isinstance(second, Boundary)
        and first.foliation.is_exact
        and second.foliation.is_exact
    ):
        return value == 0
    scale = math.sqrt(float(ext_on_cone(basepoint, first))) * math.sqrt(
        float(ext_on_cone(basepoint, second)),
    )
    return value <= tol * scale


def in_neighborhood(
    basepoint: TeichPoint,
    zeta: ModelPoint,
    eta: ModelPoint,
    delta: float,
    samples: int = DEFAULT_SAMPLES,
    rel_tol: float = REL_TOL,
) -> Membership:
    """
    Decide whether eta belongs to the neighborhood U_delta(zeta).

    The defining supremum over MF_1 is evaluated on the slope circle. A
    verdict is only given when the margin clears the numeric tolerance.
    """
    if not delta > 0:
        raise InvalidNeighborhoodError(f'delta must be positive, got {delta}.')
    if samples < NEIGHBORHOOD_MIN_SAMPLES:
        raise InvalidSamplingError(
            f'at least {NEIGHBORHOOD_MIN_SAMPLES} samples are required, got {samples}.',
        )
    zeta_cone, eta_cone = lift_psi(basepoint, zeta), lift_psi(basepoint, eta)

    def objective(thetas):
        normalizer = np.sqrt(extremal_length_on_circle(basepoint, thetas))
        return (
            np.abs(_pairing_on_circle(eta_cone, thetas) - _pairing_on_circle(zeta_cone, thetas))
            / normalizer
        )

    if zeta.is_vertex:
        bound = float(delta)
    else:
        bound = math.sqrt(float(model_extremal_length(basepoint, zeta))) * float(delta)
    supremum = _sup_with_kinks(objective, samples, _kink_angles(zeta_cone, eta_cone))
    margin = bound - supremum
    guard = 10 * rel_tol * max(1.0, bound)
    if margin > guard:
        verdict = Verdict.INSIDE
    elif margin < -guard:
        verdict = Verdict.OUTSIDE
    else:
        verdict = Verdict.UNKNOWN
    return Membership(verdict, margin, supremum, bound)

