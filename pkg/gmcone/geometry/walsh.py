# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
A proper geodesic space whose Gromov product does not extend to the
horofunction boundary.

The real line carries, for every n >= 1, the frame C_n = boundary of
[-n, n] x [0, n] glued along its bottom edge. A frame point is addressed by
its arc position l in [0, 4n], measured from the corner (-n, 0) up the left
edge, across the top and down the right edge. All distances are piecewise
linear, so rational input gives exact output.
"""
import heapq
import itertools
from dataclasses import dataclass
from typing import (
    Dict,
    Hashable,
    List,
    Optional,
    Tuple,
    Union,
)

from gmcone.geometry.exceptions import InvalidWalshPointError
from gmcone.geometry.numeric import Number, as_number, ratio


@dataclass(frozen=True)
class Line:
    s: Number

    def __post_init__(self):
        object.__setattr__(self, 's', as_number(self.s))


@dataclass(frozen=True)
class Frame:
    n: int
    ell: Number

    def __post_init__(self):
        object.__setattr__(self, 'ell', as_number(self.ell))
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidWalshPointError(f'frame index must be a positive integer, got {self.n}.')
        if not 0 <= self.ell <= 4 * self.n:
            raise InvalidWalshPointError(
                f'arc position {self.ell} is outside [0, {4 * self.n}] on frame {self.n}.',
            )

    def corner_distances(self) -> Tuple[Tuple[int, Number], Tuple[int, Number]]:
        """Bottom corners of the frame with the arc length to reach them."""
        return (-self.n, self.ell), (self.n, 4 * self.n - self.ell)


WalshPoint = Union[Line, Frame]


def b0() -> Line:
    return Line(0)


def x1(n: int) -> Line:
    return Line(-n)


def x2(n: int) -> Line:
    return Line(n)


def y1(n: int) -> Frame:
    return Frame(n, n)


def y2(n: int) -> Frame:
    return Frame(n, 3 * n)


def _exits(point: WalshPoint) -> List[Tuple[Number, Number]]:
    if isinstance(point, Line):
        return [(point.s, 0)]
    return list(point.corner_distances())


def walsh_distance(p: WalshPoint, q: WalshPoint) -> Number:
    """
    Shortest path length. Any path leaving a frame does so through one of
    its bottom corners, and along the line frames never shortcut since a
    frame arc (4n) is longer than its bottom edge (2n).
    """
    best = min(
        dp + abs(sp - sq) + dq for sp, dp in _exits(p) for sq, dq in _exits(q)
    )
    if isinstance(p, Frame) and isinstance(q, Frame) and p.n == q.n:
        best = min(best, abs(p.ell - q.ell))
    return best


def walsh_gromov(p: WalshPoint, q: WalshPoint, base: Optional[WalshPoint] = None) -> Number:
    base = b0() if base is None else base
    return ratio(walsh_distance(base, p) + walsh_distance(base, q) - walsh_distance(p, q), 2)


def horofunction(q: WalshPoint, p: WalshPoint, base: Optional[WalshPoint] = None) -> Number:
    """h_q(p) = d(p, q) - d(b0, q)."""
    base = b0() if base is None else base
    return walsh_distance(p, q) - walsh_distance(base, q)


class MetricGraph:
    """Undirected weighted graph with a heap based Dijkstra."""

    def __init__(self):
        self.adjacency: Dict[Hashable, Dict[Hashable, Number]] = {}

    def add_node(self, u):
        self.adjacency.setdefault(u, {})

    def add_edge(self, u, v, w):
        self.add_node(u)
        self.add_node(v)
        if v not in self.adjacency[u] or w < self.adjacency[u][v]:
            self.adjacency[u][v] = w
            self.adjacency[v][u] = w

    def dijkstra(self, start) -> Dict[Hashable, Number]:
        distance = {start: 0}
        counter = itertools.count()
        openset = [(0, next(counter), start)]
        closedset = set()
        while openset:
            dist_u, _, u = heapq.heappop(openset)
            if u in closedset:
                # outdated heap entry
                continue
            closedset.add(u)
            for v, w in self.adjacency[u].items():
                dist_v = dist_u + w
                if v not in distance or dist_v < distance[v]:
                    distance[v] = dist_v
                    heapq.heappush(openset, (dist_v, next(counter), v))
        return distance


def corner_graph(*points: WalshPoint) -> MetricGraph:
    """
    Graph on the line positions and frame corners involved in a query, with
    the query points inserted on their arcs.
    """
    graph = MetricGraph()
    line_nodes = {0}
    on_frames: Dict[int, List[Frame]] = {}
    for point in points:
        if isinstance(point, Line):
            line_nodes.add(point.s)
        else:
            line_nodes.update((-point.n, point.n))
            on_frames.setdefault(point.n, []).append(point)

    ordered = sorted(line_nodes)
    for node in ordered:
        graph.add_node(('line', node))
    for left, right in zip(ordered, ordered[1:]):
        graph.add_edge(('line', left), ('line', right), right - left)

    for n, frame_points in on_frames.items():
        arc = [('line', -n)]
        positions = [0]
        for point in sorted(set(frame_points), key=lambda fp: fp.ell):
            arc.append(('frame', n, point.ell))
            positions.append(point.ell)
        arc.append(('line', n))
        positions.append(4 * n)
        for i in range(len(arc) - 1):
            graph.add_edge(arc[i], arc[i + 1], positions[i + 1] - positions[i])
    return graph


def _node(point: WalshPoint):
    if isinstance(point, Line):
        return ('line', point.s)
    return ('frame', point.n, point.ell)


def walsh_distance_oracle(p: WalshPoint, q: WalshPoint) -> Number:
    graph = corner_graph(p, q)
    return graph.dijkstra(_node(p))[_node(q)]
