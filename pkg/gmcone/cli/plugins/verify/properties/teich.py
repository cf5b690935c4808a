# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import math

from gmcone.cli.plugins.verify.registry import register, worst
from gmcone.cli.plugins.verify.sampling import (
    random_float_foliation,
    random_integer_foliation,
    random_teich_point,
)
from gmcone.geometry.foliation import intersection_number
from gmcone.geometry.numeric import relative_error, slope_circle_sup
from gmcone.geometry.teich import (
    extremal_length,
    extremal_length_on_circle,
    geodesic_ray,
    hyperbolic_half_distance,
    kerckhoff_sup,
    orthogonal_pair,
    teich_distance,
)


@register('teich', 'Kerckhoff eigenvalue matches the sampled supremum', bound=1e-9)
def check_kerckhoff_grid_oracle(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau1, tau2 = random_teich_point(rng), random_teich_point(rng)
            supremum, _ = slope_circle_sup(
                lambda thetas: (
                    extremal_length_on_circle(tau1, thetas) / extremal_length_on_circle(tau2, thetas)
                ),
                run.samples,
            )
            yield relative_error(supremum, kerckhoff_sup(tau1, tau2).eigenvalue)

    return worst(errors())


@register('teich', 'Kerckhoff distance equals the hyperbolic half distance')
def check_kerckhoff_arccosh(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau1, tau2 = random_teich_point(rng), random_teich_point(rng)
            yield relative_error(teich_distance(tau1, tau2), hyperbolic_half_distance(tau1, tau2))

    return worst(errors())


@register('teich', 'the optimal pair realizes both extremal ratios', bound=1e-10)
def check_sharp_pair(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau1, tau2 = random_teich_point(rng), random_teich_point(rng)
            solution = kerckhoff_sup(tau1, tau2, run.basepoint)
            F, G = solution.maximizer, solution.minimizer
            stretch = extremal_length(tau1, F) / extremal_length(tau2, F)
            shrink = extremal_length(tau1, G) / extremal_length(tau2, G)
            yield relative_error(stretch, solution.eigenvalue)
            yield abs(shrink * solution.eigenvalue - 1)
            yield relative_error(extremal_length(run.basepoint, F), 1)
            yield relative_error(extremal_length(run.basepoint, G), 1)

    return worst(errors())


@register('teich', 'Minsky inequality', trials=20)
def check_minsky_inequality(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau = random_teich_point(rng)
            F, G = random_float_foliation(rng), random_float_foliation(rng)
            product = extremal_length(tau, F) * extremal_length(tau, G)
            yield max(0.0, intersection_number(F, G) ** 2 - product) / product

    return worst(errors())


@register('teich', 'Minsky inequality is sharp on orthogonal foliations', bound=1e-10)
def check_minsky_sharpness(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau = random_teich_point(rng)
            F, G = orthogonal_pair(tau, float(rng.uniform(0, math.pi)))
            product = extremal_length(tau, F) * extremal_length(tau, G)
            yield relative_error(intersection_number(F, G) ** 2, product)

    return worst(errors())


@register('teich', 'Teichmueller distance is symmetric')
def check_distance_symmetry(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau1, tau2 = random_teich_point(rng), random_teich_point(rng)
            yield relative_error(teich_distance(tau1, tau2), teich_distance(tau2, tau1))

    return worst(errors())


@register('teich', 'Teichmueller distance satisfies the triangle inequality')
def check_triangle_inequality(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau1, tau2, tau3 = (random_teich_point(rng) for _ in range(3))
            excess = teich_distance(tau1, tau3) - teich_distance(tau1, tau2) - teich_distance(tau2, tau3)
            yield max(0.0, excess) / max(1.0, teich_distance(tau1, tau3))

    return worst(errors())


@register('teich', 'geodesic rays are parametrized by arc length')
def check_geodesic_ray_distance(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau0 = random_teich_point(rng)
            alpha = random_integer_foliation(rng)
            t = float(rng.uniform(0, 10))
            yield relative_error(teich_distance(tau0, geodesic_ray(tau0, alpha, t)), t)

    return worst(errors())


@register('teich', 'extremal length of the vertical foliation decays along its ray', bound=1e-9)
def check_geodesic_ray_decay(run, rng, trials):
    def errors():
        for _ in range(trials):
            tau0 = random_teich_point(rng)
            alpha = random_integer_foliation(rng)
            t = float(rng.uniform(0, 10))
            decayed = extremal_length(geodesic_ray(tau0, alpha, t), alpha)
            yield relative_error(decayed * math.exp(2 * t), extremal_length(tau0, alpha))

    return worst(errors())
