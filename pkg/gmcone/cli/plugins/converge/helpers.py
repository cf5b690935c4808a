# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
Convergence experiments: truncated sup distances against the Teichmueller
distance, radial limits of the pairing and boundary limits of the Gromov
product.
"""
import csv
import math

from gmcone.cli.core.terminal import console
from gmcone.cli.core.utils import format_float
from gmcone.geometry.cone import (
    BoundaryPt,
    InteriorPt,
    ModelPoint,
    cone_to_function,
    d_infinity,
    gm_gromov_product,
    lift_phi,
    pairing_i_based,
)
from gmcone.geometry.foliation import curve_family
from gmcone.geometry.teich import (
    boundary_slope,
    geodesic_ray,
    gromov_product,
    teich_distance,
)


DINF = 'dinf'
RADIAL = 'radial'
GROMOV_BOUNDARY = 'gromov-boundary'
MODES = (DINF, RADIAL, GROMOV_BOUNDARY)

COLUMNS = {
    DINF: ('N', 'family_size', 'd_infinity', 'teich_distance', 'gap'),
    RADIAL: ('t', 'pairing', 'limit', 'error'),
    GROMOV_BOUNDARY: ('t', 'gromov_product', 'limit', 'error'),
}


def ray_parameters(t_max, steps):
    return [t_max * k / steps for k in range(steps + 1)]


def dinf_rows(point, other, truncation):
    distance = teich_distance(point, other)
    first, second = lift_phi(point), lift_phi(other)
    for N in range(1, truncation + 1):
        value = d_infinity(cone_to_function(first, N), cone_to_function(second, N))
        yield N, len(curve_family(N)), value, distance, abs(distance - value)


def radial_rows(basepoint, start, other, target, t_max, steps):
    F = boundary_slope(target, projective=False)
    fixed = ModelPoint(1, InteriorPt(other))
    limit = pairing_i_based(basepoint, fixed, ModelPoint(1, BoundaryPt(F)))
    for t in ray_parameters(t_max, steps):
        moving = ModelPoint(1, InteriorPt(geodesic_ray(start, F, t)))
        value = pairing_i_based(basepoint, fixed, moving)
        yield t, value, limit, abs(float(value) - float(limit))


def gromov_boundary_rows(basepoint, target, other_target, t_max, steps):
    F = boundary_slope(target, projective=False)
    G = boundary_slope(other_target, projective=False)
    limit = gm_gromov_product(basepoint, BoundaryPt(F), BoundaryPt(G))
    for t in ray_parameters(t_max, steps):
        value = gromov_product(
            basepoint,
            geodesic_ray(basepoint, F, t),
            geodesic_ray(basepoint, G, t),
        )
        # projectively equal targets have an infinite limit
        error = abs(value - limit) if math.isfinite(limit) else None
        yield t, value, limit, error


def _cell(value):
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    return format_float(value)


def write_rows(mode, rows, output_file):
    count = 0
    with open(output_file, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(COLUMNS[mode])
        for row in rows:
            writer.writerow([_cell(value) for value in row])
            count += 1
    console.debug(f'{count} rows written to {output_file}')
    return count
