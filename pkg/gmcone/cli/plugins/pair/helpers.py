# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import csv
import json
import os

import yaml
from click import ClickException

from gmcone.cli.core.terminal import console
from gmcone.cli.core.utils import format_float
from gmcone.geometry.cone import (
    ZERO,
    Boundary,
    BoundaryPt,
    Interior,
    InteriorPt,
    ModelPoint,
    lift_psi,
    pairing_i,
)
from gmcone.geometry.exceptions import GeometryError
from gmcone.geometry.foliation import MeasuredFoliation
from gmcone.geometry.numeric import as_number
from gmcone.geometry.teich import TeichPoint, gromov_product, teich_distance


CSV_COLUMNS = ('row', 'col', 'pairing', 'teich_distance', 'gromov_product')


def _pair(values, name):
    if not isinstance(values, (list, tuple)) or len(values) != 2:
        raise ClickException(f'`{name}` must be a list of two numbers, got {values!r}.')
    return tuple(as_number(v) for v in values)


def parse_point(basepoint, data):
    """
    Build a cone point from its input description.

    Cone points are given by kind `zero`, `interior` (`point` and optional
    `scale`) or `boundary` (`foliation`); kind `model` takes a radius `t`
    with either `interior` or `boundary` and is lifted at the basepoint.
    """
    if not isinstance(data, dict) or 'kind' not in data:
        raise ClickException(f'Invalid point {data!r}: a mapping with a `kind` is expected.')
    kind = data['kind']
    try:
        if kind == 'zero':
            return ZERO
        if kind == 'interior':
            return Interior(as_number(data.get('scale', 1)), TeichPoint(*_pair(data['point'], 'point')))
        if kind == 'boundary':
            return Boundary(MeasuredFoliation(*_pair(data['foliation'], 'foliation')))
        if kind == 'model':
            if 'interior' in data:
                p = InteriorPt(TeichPoint(*_pair(data['interior'], 'interior')))
            else:
                p = BoundaryPt(MeasuredFoliation(*_pair(data['boundary'], 'boundary')))
            return lift_psi(basepoint, ModelPoint(as_number(data['t']), p))
    except KeyError as e:
        raise ClickException(f'Invalid point {data!r}: missing key {e}.')
    except (GeometryError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ClickException(f'Invalid point {data!r}: {e}')
    raise ClickException(f'Invalid point {data!r}: unknown kind `{kind}`.')


def load_points(basepoint, input_file):
    extension = os.path.splitext(input_file)[1].lower()
    with open(input_file, 'r') as f:
        try:
            if extension in ('.yaml', '.yml'):
                data = yaml.safe_load(f)
            else:
                data = json.load(f)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise ClickException(f'The input file `{input_file}` cannot be parsed: {e}')
    if isinstance(data, dict):
        data = data.get('points')
    if not isinstance(data, list) or not data:
        raise ClickException(f'The input file `{input_file}` does not contain a list of points.')
    return [parse_point(basepoint, item) for item in data]


def pairing_rows(basepoint, points):
    for row, first in enumerate(points):
        for col, second in enumerate(points):
            distance = gromov = None
            if isinstance(first, Interior) and isinstance(second, Interior):
                distance = teich_distance(first.point, second.point)
                gromov = gromov_product(basepoint, first.point, second.point)
            yield row, col, pairing_i(first, second), distance, gromov


def write_pairings(basepoint, points, output_file):
    with open(output_file, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        count = 0
        for row, col, pairing, distance, gromov in pairing_rows(basepoint, points):
            writer.writerow((row, col, format_float(pairing), format_float(distance), format_float(gromov)))
            count += 1
    console.debug(f'{count} pairings written to {output_file}')
    return count
