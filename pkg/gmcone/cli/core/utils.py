# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import importlib
import math
import os
from importlib.metadata import entry_points

import click

from gmcone.cli.core.constants import CSV_SIGNIFICANT_DIGITS
from gmcone.geometry.exceptions import GeometryError
from gmcone.geometry.numeric import as_number
from gmcone.geometry.teich import INFINITY, TeichPoint


def iter_entry_points(group, name=None):
    eps = entry_points()
    if hasattr(eps, 'select'):
        group_entrypoints = eps.select(group=group)
    else:  # pragma: no cover
        group_entrypoints = eps.get(group, [])
    for ep in group_entrypoints:
        if name:
            if ep.name == name:
                yield ep
        else:
            yield ep


def load_object(path):
    """Resolve a `module:attribute` reference."""
    module_name, attribute = path.split(':', 1)
    return getattr(importlib.import_module(module_name), attribute)


def parse_point(value):
    try:
        return TeichPoint.parse(value)
    except GeometryError as e:
        raise click.BadParameter(str(e))


def point_option_callback(ctx, param, value):
    if value is None:
        return None
    return parse_point(value)


def format_float(value):
    """Full precision decimal used by every CSV the cli writes."""
    if value is None:
        return ''
    value = float(value)
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return f'{value:.{CSV_SIGNIFICANT_DIGITS}g}'


def validate_output_file(output_file):
    directory = os.path.dirname(os.path.abspath(output_file))
    if not os.path.isdir(directory):
        raise click.ClickException(f'Output directory {directory} does not exist.')
    return output_file


def parse_slope(value):
    """Ideal point of the half-plane: `inf` or a rational such as `-3/2`."""
    text = str(value).strip().lower()
    if text in ('inf', '+inf', 'infinity', '∞'):
        return INFINITY
    try:
        return as_number(text)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f'invalid ideal point `{value}`.')


def slope_option_callback(ctx, param, value):
    if value is None:
        return None
    return parse_slope(value)
