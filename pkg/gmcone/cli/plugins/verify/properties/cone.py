# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import math
from fractions import Fraction

import numpy as np

from gmcone.cli.plugins.verify.registry import register, worst
from gmcone.cli.plugins.verify.sampling import (
    random_closure_point,
    random_cone_point,
    random_integer_foliation,
    random_model_point,
    random_pythagorean_foliation,
    random_rational_foliation,
    random_slope,
    random_teich_point,
)
from gmcone.geometry.cone import (
    NEIGHBORHOOD_MIN_SAMPLES,
    Boundary,
    BoundaryPt,
    Interior,
    InteriorPt,
    ModelPoint,
    Verdict,
    cone_to_function,
    d_infinity,
    e_extension,
    ext_on_cone,
    ext_sup_oracle,
    gm_gromov_product,
    in_neighborhood,
    lift_phi,
    lift_psi,
    model_extremal_length,
    model_to_function,
    null_test,
    pairing_i,
    pairing_i_based,
    psi_inverse,
)
from gmcone.geometry.foliation import (
    MeasuredFoliation,
    curve_family,
    intersection_number,
)
from gmcone.geometry.numeric import exact_sqrt, relative_error
from gmcone.geometry.teich import (
    DEFAULT_BASEPOINT,
    TeichPoint,
    boundary_slope,
    extremal_length,
    geodesic_endpoints,
    geodesic_ray,
    gromov_product,
    teich_distance,
)


DINF_TRUNCATIONS = (1, 2, 5, 10, 25)
RADIAL_PARAMETER = 20
PROJECTIVE_PARAMETER = 12
NEIGHBORHOOD_CASES = 4
WITNESS_ANGLES = 2048


def _unit(p):
    return ModelPoint(1, p)


def _perturbed(rng, zeta, delta):
    stretch = 1 + float(rng.uniform(-delta, delta)) / 2
    if isinstance(zeta.p, InteriorPt):
        tau = zeta.p.point
        shift = delta / 4
        p = InteriorPt(
            TeichPoint(
                tau.x + float(rng.uniform(-shift, shift)) * tau.y,
                tau.y * (1 + float(rng.uniform(-shift, shift))),
            ),
        )
    else:
        G = zeta.p.foliation
        angle = float(rng.uniform(-delta, delta)) / 4
        p = BoundaryPt(
            MeasuredFoliation(
                G.a * math.cos(angle) - G.b * math.sin(angle),
                G.a * math.sin(angle) + G.b * math.cos(angle),
            ),
        )
    return ModelPoint(zeta.t * stretch, p)


def _neighborhood_cases(run, rng, trials):
    """
    Pairs (zeta, eta) with their verdict, cycling through four kinds: a
    rescaled basepoint sitting exactly on the neighborhood boundary, a small
    perturbation of zeta, an unrelated point with t in [zeta.t / 10, 10 zeta.t]
    and zeta itself rescaled by a factor between 2.5 and 10.
    """
    samples = max(run.samples, NEIGHBORHOOD_MIN_SAMPLES)
    for i in range(max(trials, NEIGHBORHOOD_CASES)):
        delta = float(rng.uniform(0.05, 1.0))
        kind = i % NEIGHBORHOOD_CASES
        if kind == 0:
            t = float(rng.uniform(0.25, 4.0))
            zeta = ModelPoint(t, InteriorPt(run.basepoint))
            eta = ModelPoint(t * (1 + delta), InteriorPt(run.basepoint))
        else:
            zeta = random_model_point(rng)
            if kind == 1:
                eta = _perturbed(rng, zeta, delta)
            elif kind == 2:
                eta = ModelPoint(zeta.t * 10 ** float(rng.uniform(-1, 1)), random_closure_point(rng))
            else:
                sign = 1 if rng.random() < 0.5 else -1
                eta = ModelPoint(zeta.t * 10 ** (sign * float(rng.uniform(0.4, 1))), zeta.p)
        membership = in_neighborhood(run.basepoint, zeta, eta, delta, samples)
        yield zeta, eta, delta, membership


def _neighborhood_bound(x0, zeta, delta):
    return math.sqrt(float(model_extremal_length(x0, zeta))) * delta


def _scale_error(x0, zeta, eta, delta):
    """How far sqrt Ext(eta) leaves [(1 - delta), (1 + delta)] * sqrt Ext(zeta)."""
    scale = math.sqrt(float(model_extremal_length(x0, zeta)))
    value = math.sqrt(float(model_extremal_length(x0, eta)))
    return max(0.0, value - (1 + delta) * scale, (1 - delta) * scale - value) / scale


def _witness_gap(x0, zeta, eta, N):
    """
    Largest normalized pairing gap |i(eta, F) - i(zeta, F)| / sqrt Ext(F) over
    the curve family, the foliations of zeta and eta and a fixed angle grid.
    """
    zeta_cone, eta_cone = lift_psi(x0, zeta), lift_psi(x0, eta)
    witnesses = [curve.as_foliation() for curve in curve_family(N)]
    witnesses.extend(cone.foliation for cone in (zeta_cone, eta_cone) if isinstance(cone, Boundary))
    thetas = np.linspace(0, math.pi, WITNESS_ANGLES, endpoint=False)
    witnesses.extend(MeasuredFoliation(float(a), float(b)) for a, b in zip(np.cos(thetas), np.sin(thetas)))
    return max(
        abs(float(pairing_i(eta_cone, Boundary(F))) - float(pairing_i(zeta_cone, Boundary(F))))
        / math.sqrt(float(extremal_length(x0, F)))
        for F in witnesses
    )


@register('cone', 'self pairing is c^2 on the hyperboloid and 0 on the light cone', exact=True)
def check_light_cone(run, rng, trials):
    def errors():
        for _ in range(trials):
            point = random_cone_point(rng, exact=True)
            expected = point.scale * point.scale if isinstance(point, Interior) else 0
            yield abs(pairing_i(point, point) - expected)

    return worst(errors())


@register('cone', 'log of the interior pairing is the Teichmueller distance')
def check_interior_log_pairing(run, rng, trials):
    def errors():
        for _ in range(trials):
            y, z = random_teich_point(rng), random_teich_point(rng)
            yield relative_error(math.log(pairing_i(lift_phi(y), lift_phi(z))), teich_distance(y, z))
            yield abs(pairing_i(lift_phi(y), lift_phi(y)) - 1)

    return worst(errors())


@register('cone', 'pairing of foliations is the intersection number', exact=True)
def check_boundary_pairing(run, rng, trials):
    def errors():
        for _ in range(trials):
            F, G = random_rational_foliation(rng), random_rational_foliation(rng)
            yield abs(pairing_i(Boundary(F), Boundary(G)) - abs(F.b * G.a - F.a * G.b))

    return worst(errors())


@register('cone', 'pairing with a foliation is the root of extremal length')
def check_interior_boundary_pairing(run, rng, trials):
    def errors():
        for _ in range(trials):
            c, tau = float(rng.uniform(0.25, 4)), random_teich_point(rng)
            G = random_integer_foliation(rng)
            expected = c * abs(G.a + G.b * tau.as_complex()) / math.sqrt(tau.y)
            yield relative_error(pairing_i(Interior(c, tau), Boundary(G)), expected)
            yield relative_error(pairing_i(Boundary(G), Interior(c, tau)), expected)

    return worst(errors())


@register('cone', 'Minsky inequality extends to the cone')
def check_extended_minsky(run, rng, trials):
    def errors():
        for _ in range(trials):
            x = random_teich_point(rng)
            a, b = random_cone_point(rng), random_cone_point(rng)
            product = ext_on_cone(x, a) * ext_on_cone(x, b)
            yield max(0.0, pairing_i(a, b) ** 2 - product) / product

    return worst(errors())


@register('cone', 'extended Minsky inequality is sharp at geodesic endpoints', bound=1e-10)
def check_extended_minsky_sharpness(run, rng, trials):
    def errors():
        for i in range(trials):
            x = random_teich_point(rng)
            if i % 10 == 0:
                w = TeichPoint(x.x, float(rng.uniform(0.25, 4)))
            else:
                w = random_teich_point(rng)
                while abs(w.x - x.x) < 0.05:
                    w = random_teich_point(rng)
            r1, r2 = geodesic_endpoints(x, w)
            F = Boundary(boundary_slope(r1, projective=False))
            G = Boundary(boundary_slope(r2, projective=False))
            yield relative_error(pairing_i(F, G) ** 2, ext_on_cone(x, F) * ext_on_cone(x, G))

    return worst(errors())


@register('cone', 'pairing along a ray converges to the pairing with its endpoint', bound=1e-6, trials=0.1)
def check_radial_limit(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for _ in range(trials):
            y = _unit(InteriorPt(random_teich_point(rng)))
            F = boundary_slope(random_slope(rng), projective=False)
            far = _unit(InteriorPt(geodesic_ray(x0, F, RADIAL_PARAMETER)))
            yield relative_error(
                pairing_i_based(x0, y, far),
                pairing_i_based(x0, y, _unit(BoundaryPt(F))),
            )

    return worst(errors())


def _projective_gap(f, g):
    f = np.array([float(v) for v in f.values])
    g = np.array([float(v) for v in g.values])
    return float(np.max(np.abs(f / np.max(f) - g / np.max(g))))


@register('cone', 'function vectors along a ray converge projectively to its boundary slope', bound=1e-6, trials=0.1)
def check_projective_ray_limit(run, rng, trials):
    N = min(run.truncation, 8)

    def errors():
        for _ in range(trials):
            r = random_slope(rng)
            start = random_teich_point(rng)
            far = geodesic_ray(start, boundary_slope(r, projective=False), PROJECTIVE_PARAMETER)
            yield _projective_gap(
                cone_to_function(lift_phi(far), N),
                cone_to_function(Boundary(boundary_slope(r)), N),
            )

    return worst(errors())


@register('cone', 'extended Gromov product agrees with the metric one on interior points')
def check_interior_gromov_product(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for _ in range(trials):
            y, z = random_teich_point(rng), random_teich_point(rng)
            yield relative_error(
                gm_gromov_product(x0, InteriorPt(y), InteriorPt(z)),
                gromov_product(x0, y, z),
            )

    return worst(errors())


@register('cone', 'boundary Gromov product is the normalized intersection number')
def check_boundary_gromov_identity(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for _ in range(trials):
            F, G = random_integer_foliation(rng), random_integer_foliation(rng)
            expected = intersection_number(F, G) / math.sqrt(
                float(extremal_length(x0, F) * extremal_length(x0, G)),
            )
            value = math.exp(-2 * gm_gromov_product(x0, BoundaryPt(F), BoundaryPt(G)))
            yield relative_error(value, expected)

    return worst(errors())


@register('cone', 'boundary pairing and level set are exact on rational unit slopes', exact=True)
def check_pythagorean_exactness(run, rng, trials):
    x0 = DEFAULT_BASEPOINT

    def errors():
        for _ in range(trials):
            F, G = random_pythagorean_foliation(rng), random_pythagorean_foliation(rng)
            expected = Fraction(
                intersection_number(F, G),
                exact_sqrt(extremal_length(x0, F)) * exact_sqrt(extremal_length(x0, G)),
            )
            yield abs(pairing_i_based(x0, _unit(BoundaryPt(F)), _unit(BoundaryPt(G))) - expected)
            yield abs(model_extremal_length(x0, _unit(BoundaryPt(F))) - 1)

    return worst(errors())


@register('cone', 'extremal length of a lifted interior point')
def check_ext_on_cone_lemma(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for _ in range(trials):
            t = float(rng.uniform(0.25, 4))
            y, z = random_teich_point(rng), random_teich_point(rng)
            expected = t * t * math.exp(-2 * teich_distance(x0, z) + 2 * teich_distance(y, z))
            yield relative_error(ext_on_cone(y, lift_psi(x0, ModelPoint(t, InteriorPt(z)))), expected)

    return worst(errors())


@register('cone', 'extremal length is the supremum of normalized pairings', bound=1e-8, trials=0.2)
def check_ext_sup_oracle(run, rng, trials):
    def errors():
        for _ in range(trials):
            y, point = random_teich_point(rng), random_cone_point(rng)
            yield relative_error(ext_sup_oracle(y, point, run.samples), ext_on_cone(y, point))

    return worst(errors())


@register('cone', 'extremal length vanishes only at the vertex', exact=True)
def check_non_triviality(run, rng, trials):
    def errors():
        for _ in range(trials):
            y = random_teich_point(rng, exact=True)
            point = random_cone_point(rng, exact=True, zero_rate=0.2)
            yield float((ext_on_cone(y, point) == 0) != point.is_zero)

    return worst(errors())


@register('cone', 'extremal length on the cone has bounded distortion')
def check_distortion(run, rng, trials):
    def errors():
        for _ in range(trials):
            y1, y2 = random_teich_point(rng), random_teich_point(rng)
            point = random_cone_point(rng)
            distortion = math.exp(2 * teich_distance(y1, y2))
            quotient = ext_on_cone(y2, point) / ext_on_cone(y1, point)
            yield max(0.0, quotient / distortion - 1, 1 / (quotient * distortion) - 1)

    return worst(errors())


@register('cone', 'unit model points lie on the unit level set')
def check_level_set(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for _ in range(trials):
            model = random_model_point(rng)
            yield relative_error(model_extremal_length(x0, ModelPoint(1, model.p)), 1)

    return worst(errors())


@register('cone', 'neighborhoods control extremal length', bound=1e-3, trials=0.4)
def check_neighborhood_sandwich(run, rng, trials):
    x0 = run.basepoint
    N = min(run.truncation, 8)

    def errors():
        seen = set()
        for zeta, eta, delta, membership in _neighborhood_cases(run, rng, trials):
            seen.add(membership.verdict)
            if membership.verdict == Verdict.INSIDE:
                yield _scale_error(x0, zeta, eta, delta)
            elif membership.verdict == Verdict.OUTSIDE:
                bound = _neighborhood_bound(x0, zeta, delta)
                yield max(0.0, bound - _witness_gap(x0, zeta, eta, N)) / bound
        if seen != set(Verdict):
            yield math.inf

    return worst(errors())


@register('cone', 'extensions are equicontinuous on neighborhoods', bound=1e-9, trials=0.4)
def check_equicontinuity(run, rng, trials):
    x0 = run.basepoint

    def errors():
        inside = 0
        for zeta, eta, delta, membership in _neighborhood_cases(run, rng, trials):
            if membership.verdict != Verdict.INSIDE:
                continue
            inside += 1
            bound = max(1.0, math.sqrt(float(model_extremal_length(x0, zeta)))) * delta
            for _ in range(4):
                y = random_teich_point(rng)
                difference = abs(e_extension(x0, y, zeta) - e_extension(x0, y, eta))
                yield max(0.0, difference - bound) / bound
        if not inside:
            yield math.inf

    return worst(errors())


@register('cone', 'based pairing is symmetric on interior points', exact=True)
def check_based_symmetry(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for _ in range(trials):
            y, z = random_teich_point(rng), random_teich_point(rng)
            yield abs(
                e_extension(x0, y, _unit(InteriorPt(z)))
                - e_extension(x0, z, _unit(InteriorPt(y))),
            )

    return worst(errors())


@register('cone', 'truncated sup distance increases to the Teichmueller distance', bound=1e-6, trials=0.2)
def check_dinf_convergence(run, rng, trials):
    truncations = sorted({N for N in DINF_TRUNCATIONS if N < run.truncation} | {run.truncation})

    def errors():
        for _ in range(trials):
            y = random_teich_point(rng, x_bound=1, y_low=0.5, y_high=2)
            z = random_teich_point(rng, x_bound=1, y_low=0.5, y_high=2)
            previous = 0.0
            for N in truncations:
                current = d_infinity(cone_to_function(lift_phi(y), N), cone_to_function(lift_phi(z), N))
                yield max(0.0, previous - current)
                previous = current
            yield abs(teich_distance(y, z) - previous)

    return worst(errors())


@register('cone', 'the pairing does not depend on the basepoint')
def check_basepoint_independence(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for _ in range(trials):
            x1 = random_teich_point(rng)
            a, b = random_cone_point(rng), random_cone_point(rng)
            expected = pairing_i(a, b)
            for x in (x0, x1):
                yield relative_error(pairing_i_based(x, psi_inverse(x, a), psi_inverse(x, b)), expected)
            y, z = random_teich_point(rng), random_teich_point(rng)
            rescaled = [
                pairing_i_based(x, _unit(InteriorPt(y)), _unit(InteriorPt(z)))
                * math.exp(teich_distance(x, y) + teich_distance(x, z))
                for x in (x0, x1)
            ]
            yield relative_error(rescaled[1], rescaled[0])

    return worst(errors())


@register('cone', 'null spaces are trivial inside and projective classes on the boundary', exact=True)
def check_null_space(run, rng, trials):
    x0 = run.basepoint

    def errors():
        for i in range(trials):
            case = i % 3
            if case == 0:
                first = random_cone_point(rng, exact=True)
                while not isinstance(first, Interior):
                    first = random_cone_point(rng, exact=True)
                yield float(null_test(first, random_cone_point(rng, exact=True), basepoint=x0))
            elif case == 1:
                F = random_integer_foliation(rng)
                k = int(rng.integers(1, 6)) * (1 if rng.random() < 0.5 else -1)
                yield float(not null_test(Boundary(F), Boundary(F.scaled(k)), basepoint=x0))
            else:
                F, G = random_integer_foliation(rng), random_integer_foliation(rng)
                proportional = F.a * G.b == F.b * G.a
                yield float(null_test(Boundary(F), Boundary(G), basepoint=x0) != proportional)

    return worst(errors())


@register('cone', 'function vectors evaluate the pairing on curve classes', trials=0.1)
def check_function_vector(run, rng, trials):
    x0 = run.basepoint
    N = min(run.truncation, 8)

    def errors():
        for _ in range(trials):
            model = random_model_point(rng)
            vector = model_to_function(x0, model, N)
            point = lift_psi(x0, model)
            for curve, value in zip(vector.family, vector.values):
                yield relative_error(value, pairing_i(point, Boundary(curve.as_foliation())))
            yield float(vector.is_zero)
            vertex = model_to_function(x0, ModelPoint(0, model.p), N)
            yield float(not vertex.is_zero)

    return worst(errors())
