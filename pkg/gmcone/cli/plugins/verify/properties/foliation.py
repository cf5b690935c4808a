# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import math

from gmcone.cli.plugins.verify.registry import register, worst
from gmcone.cli.plugins.verify.sampling import (
    random_float_foliation,
    random_positive_fraction,
    random_rational_foliation,
)
from gmcone.geometry.foliation import (
    CurveClass,
    curve_family,
    intersection_number,
    normalize_projective,
)
from gmcone.geometry.numeric import ratio, relative_error


def _proportional(F, G):
    k = ratio(G.a, F.a) if F.a != 0 else ratio(G.b, F.b)
    return F.scaled(k) == G


@register('foliation', 'intersection number is symmetric', exact=True)
def check_intersection_symmetry(run, rng, trials):
    def errors():
        for _ in range(trials):
            F, G = random_rational_foliation(rng), random_rational_foliation(rng)
            yield abs(intersection_number(F, G) - intersection_number(G, F))

    return worst(errors())


@register('foliation', 'intersection number is bihomogeneous', exact=True)
def check_intersection_bihomogeneity(run, rng, trials):
    def errors():
        for _ in range(trials):
            F, G = random_rational_foliation(rng), random_rational_foliation(rng)
            s, t = random_positive_fraction(rng, 0, 8), random_positive_fraction(rng, 0, 8)
            yield abs(intersection_number(F.scaled(s), G.scaled(t)) - s * t * intersection_number(F, G))

    return worst(errors())


@register('foliation', 'vanishing intersection characterizes proportional slopes', exact=True)
def check_null_iff_proportional(run, rng, trials):
    def errors():
        for i in range(trials):
            F = random_rational_foliation(rng)
            if i % 2:
                sign = 1 if rng.random() < 0.5 else -1
                G = F.scaled(sign * random_positive_fraction(rng, 0, 8))
            else:
                G = random_rational_foliation(rng)
            yield float((intersection_number(F, G) == 0) != _proportional(F, G))

    return worst(errors())


@register('foliation', 'projective normalization is idempotent')
def check_normalize_idempotent(run, rng, trials):
    def errors():
        for _ in range(trials):
            F = normalize_projective(random_float_foliation(rng))
            G = normalize_projective(F)
            yield max(relative_error(G.a, F.a), relative_error(G.b, F.b))

    return worst(errors())


@register('foliation', 'projective normalization is scale invariant')
def check_normalize_scale_invariant(run, rng, trials):
    def errors():
        for _ in range(trials):
            F = random_float_foliation(rng)
            s = float(rng.uniform(1e-3, 1e3))
            G, H = normalize_projective(F.scaled(s)), normalize_projective(F)
            yield max(relative_error(G.a, H.a), relative_error(G.b, H.b), abs(math.hypot(G.a, G.b) - 1))

    return worst(errors())


@register('foliation', 'curve family enumerates canonical primitive slopes', exact=True, trials=0.04)
def check_curve_family(run, rng, trials):
    def errors():
        for N in range(1, trials + 1):
            family = curve_family(N)
            expected = sorted(
                CurveClass.canonical(p, q)
                for p in range(-N, N + 1)
                for q in range(0, N + 1)
                if math.gcd(abs(p), q) == 1
            )
            expected = sorted(set(expected))
            yield float(family != expected)
            yield float(CurveClass(1, 0) not in family or CurveClass(0, 1) not in family)

    return worst(errors())
