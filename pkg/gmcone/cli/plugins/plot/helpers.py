# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
Scenes for the SVG figures. Every coordinate is rounded to three decimals
so repeated runs render identical files.
"""
import math
import os
from dataclasses import dataclass, field
from typing import List, Tuple

from click import ClickException
from jinja2 import Environment, FileSystemLoader, select_autoescape

from gmcone.cli.core.terminal import console
from gmcone.geometry.cone import (
    Boundary,
    BoundaryPt,
    InteriorPt,
    ModelPoint,
    lift_phi,
    lift_psi,
    pairing_i,
)
from gmcone.geometry.foliation import CurveClass
from gmcone.geometry.teich import (
    INFINITY,
    boundary_slope,
    geodesic_endpoints,
    geodesic_ray,
    teich_distance,
)
from gmcone.geometry.walsh import Frame, y1, y2


TEMPLATES_DIR = os.path.join(os.path.dirname(__file__), 'templates')

WIDTH = 640
HEIGHT = 400
MARGIN = 24

GEODESIC = 'geodesic'
EMBEDDING = 'embedding'
WALSH = 'walsh'
FIGURES = (GEODESIC, EMBEDDING, WALSH)

PROJECTION_CURVES = (CurveClass(1, 0), CurveClass(0, 1), CurveClass(1, 1))
EMBEDDING_SAMPLES = 48
EMBEDDING_STRETCH = 4


def fmt(value):
    return f'{value:.3f}'


@dataclass
class Viewport:
    """Affine map from a window of the plane onto the drawing area."""
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    @property
    def scale(self):
        return min(
            (WIDTH - 2 * MARGIN) / (self.xmax - self.xmin),
            (HEIGHT - 2 * MARGIN) / (self.ymax - self.ymin),
        )

    def x(self, value):
        return fmt(MARGIN + (float(value) - self.xmin) * self.scale)

    def y(self, value):
        return fmt(HEIGHT - MARGIN - (float(value) - self.ymin) * self.scale)

    def length(self, value):
        return fmt(float(value) * self.scale)

    def point(self, x, y):
        return self.x(x), self.y(y)


@dataclass
class Scene:
    title: str
    width: int = WIDTH
    height: int = HEIGHT
    context: dict = field(default_factory=dict)


def get_environment():
    return Environment(
        loader=FileSystemLoader(searchpath=TEMPLATES_DIR),
        keep_trailing_newline=True,
        trim_blocks=True,
        lstrip_blocks=True,
        autoescape=select_autoescape(enabled_extensions=('svg.j2',)),
    )


def render(figure, scene):
    template = get_environment().get_template(f'{figure}.svg.j2')
    return template.render(scene=scene, **scene.context)


def geodesic_scene(start, end):
    if start == end:
        raise ClickException('A geodesic needs two distinct points.')
    e1, e2 = geodesic_endpoints(start, end)
    top = max(float(start.y), float(end.y))
    if e2 == INFINITY:
        x = float(e1)
        view = Viewport(x - top, x + top, 0, 1.5 * top)
        path = f'M {view.x(x)} {view.y(0)} L {view.x(x)} {view.y(view.ymax)}'
        ideals = [view.point(x, 0), view.point(x, view.ymax)]
        labels = [str(e1), '∞']
    else:
        center, radius = (float(e1) + float(e2)) / 2, (float(e2) - float(e1)) / 2
        view = Viewport(center - 1.25 * radius, center + 1.25 * radius, 0, 1.25 * radius)
        r = view.length(radius)
        path = (
            f'M {view.x(e1)} {view.y(0)} A {r} {r} 0 0 1 {view.x(e2)} {view.y(0)}'
        )
        ideals = [view.point(e1, 0), view.point(e2, 0)]
        labels = [str(e1), str(e2)]
    console.debug(f'geodesic through {start} and {end} ends at {labels[0]} and {labels[1]}')
    return Scene(
        title=f'Geodesic through {start} and {end}',
        context={
            'axis': (view.x(view.xmin), view.x(view.xmax), view.y(0)),
            'path': path,
            'ideals': list(zip(ideals, labels)),
            'points': [(view.point(p.x, p.y), str(p)) for p in (start, end)],
        },
    )


def forward_foliation(start, end):
    """Vertical foliation of the ray from start through end."""
    distance = teich_distance(start, end)
    candidates = [boundary_slope(e, projective=False) for e in geodesic_endpoints(start, end)]
    return min(
        candidates,
        key=lambda F: teich_distance(geodesic_ray(start, F, distance), end),
    )


def project(values):
    """Isometric view of three coordinates."""
    u, v, w = (float(value) for value in values)
    c, s = math.cos(math.pi / 6), math.sin(math.pi / 6)
    return (u - v) * c, w - (u + v) * s


def coordinates(cone_point):
    """Pairing of a cone point with the three projection curves."""
    return [
        float(pairing_i(cone_point, Boundary(curve.as_foliation())))
        for curve in PROJECTION_CURVES
    ]


def embedding_scene(basepoint, start, end):
    if start == end:
        raise ClickException('The embedding figure needs two distinct points.')
    F = forward_foliation(start, end)
    horizon = EMBEDDING_STRETCH * teich_distance(start, end)
    rays = [
        geodesic_ray(start, F, horizon * k / EMBEDDING_SAMPLES)
        for k in range(EMBEDDING_SAMPLES + 1)
    ]
    phi_values = [coordinates(lift_phi(tau)) for tau in rays]
    psi_values = [
        coordinates(lift_psi(basepoint, ModelPoint(1, InteriorPt(tau))))
        for tau in rays
    ]
    limit_values = coordinates(lift_psi(basepoint, ModelPoint(1, BoundaryPt(F))))
    # the hyperboloid leaves every window, frame it by the slice
    axes_length = max(max(row) for row in psi_values + [limit_values, phi_values[0]])
    hyperboloid = [project(row) for row in phi_values if max(row) <= 2 * axes_length]
    psi_slice = [project(row) for row in psi_values]
    limit = project(limit_values)
    axes = [project(row) for row in ((axes_length, 0, 0), (0, axes_length, 0), (0, 0, axes_length))]
    everything = hyperboloid + psi_slice + axes + [limit, (0.0, 0.0)]
    xs, ys = [p[0] for p in everything], [p[1] for p in everything]
    view = Viewport(min(xs), max(xs), min(ys), max(ys))

    def polyline(points):
        return ' '.join(f'{view.x(x)},{view.y(y)}' for x, y in points)

    return Scene(
        title=f'Function vectors along the ray from {start} through {end}',
        context={
            'origin': view.point(0, 0),
            'axes': [
                (view.point(*axis), f'({curve.p},{curve.q})')
                for axis, curve in zip(axes, PROJECTION_CURVES)
            ],
            'hyperboloid': polyline(hyperboloid),
            'slice': polyline(psi_slice),
            'ideal': view.point(*limit),
            'start': view.point(*psi_slice[0]),
        },
    )


def frame_point_xy(point: Frame) -> Tuple:
    n, ell = point.n, point.ell
    if ell <= n:
        return -n, ell
    if ell <= 3 * n:
        return ell - 2 * n, n
    return n, 4 * n - ell


def walsh_scene(frames):
    view = Viewport(-(frames + 1), frames + 1, 0, frames + 0.5)
    rects: List = []
    anchors: List = []
    for n in range(1, frames + 1):
        rects.append(
            (view.x(-n), view.y(n), view.length(2 * n), view.length(n), f'C{n}'),
        )
        for name, point in (('y1', y1(n)), ('y2', y2(n))):
            anchors.append((view.point(*frame_point_xy(point)), f'{name}({n})'))
        anchors.append((view.point(-n, 0), f'x1({n})'))
        anchors.append((view.point(n, 0), f'x2({n})'))
    return Scene(
        title=f'Line with frames C1 to C{frames}',
        context={
            'baseline': (view.x(view.xmin), view.x(view.xmax), view.y(0)),
            'base': view.point(0, 0),
            'rects': rects,
            'anchors': anchors,
        },
    )


def write_svg(content, output_file):
    with open(output_file, 'w', encoding='utf-8') as f:
        f.write(content)
    console.debug(f'{len(content)} characters written to {output_file}')
