# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
from gmcone.cli.plugins.verify.registry import register, worst
from gmcone.cli.plugins.verify.sampling import random_fraction, random_walsh_point
from gmcone.geometry.walsh import (
    Line,
    b0,
    horofunction,
    walsh_distance,
    walsh_distance_oracle,
    walsh_gromov,
    x1,
    x2,
    y1,
    y2,
)


MAX_ANCHOR = 30
SAMPLE_SIZE = 50
SAMPLE_MAX_FRAME = 5
SAMPLE_LINE_BOUND = 10


@register('walsh', 'distance is a metric', exact=True)
def check_metric_axioms(run, rng, trials):
    def errors():
        for _ in range(trials):
            p, q, r = (random_walsh_point(rng) for _ in range(3))
            yield walsh_distance(p, p)
            yield abs(walsh_distance(p, q) - walsh_distance(q, p))
            yield max(0, walsh_distance(p, r) - walsh_distance(p, q) - walsh_distance(q, r))

    return worst(errors())


@register('walsh', 'closed form distance equals the shortest path oracle', exact=True, trials=2)
def check_dijkstra_oracle(run, rng, trials):
    def errors():
        for _ in range(trials):
            p, q = random_walsh_point(rng), random_walsh_point(rng)
            yield abs(walsh_distance(p, q) - walsh_distance_oracle(p, q))

    return worst(errors())


@register('walsh', 'Gromov products of the two anchor sequences diverge', exact=True, fixed=MAX_ANCHOR)
def check_divergent_gromov(run, rng, trials):
    def errors():
        for n in range(1, MAX_ANCHOR + 1):
            yield walsh_gromov(x1(n), x2(n))
            yield abs(walsh_gromov(y1(n), y2(n)) - n)

    return worst(errors())


@register('walsh', 'anchor distances and line horofunctions', exact=True, fixed=MAX_ANCHOR)
def check_anchor_distances(run, rng, trials):
    def errors():
        for n in range(1, MAX_ANCHOR + 1):
            yield abs(walsh_distance(b0(), y1(n)) - 2 * n)
            yield abs(walsh_distance(y1(n), y2(n)) - 2 * n)
            yield walsh_gromov(b0(), y1(n))
            t = random_fraction(rng, -n, n, denominator=8)
            if -n < t < n:
                yield abs(horofunction(x1(n), Line(t)) - t)
                yield abs(horofunction(y1(n), Line(t)) - t)

    return worst(errors())


@register(
    'walsh',
    'both anchor sequences define the same horofunction on a sample',
    exact=True,
    fixed=MAX_ANCHOR * SAMPLE_SIZE,
)
def check_busemann_sample(run, rng, trials):
    sample = [
        random_walsh_point(rng, max_frame=SAMPLE_MAX_FRAME, line_bound=SAMPLE_LINE_BOUND)
        for _ in range(SAMPLE_SIZE)
    ]
    first = SAMPLE_LINE_BOUND + 1

    def errors():
        for n in range(first, first + MAX_ANCHOR):
            for p in sample:
                yield abs(horofunction(x1(n), p) - horofunction(y1(n), p))

    return worst(errors())
