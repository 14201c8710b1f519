# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

import numpy as np

from ..common import InvalidParameterError, require_positive

BASIS = np.array([[1.0, 0.0],
                  [0.5, math.sqrt(3) / 2]])
""" Rows are a1/a and a2/a. """

DISTANCE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class LatticeSpec:
    """
    Triangular grating lattice. All lengths are in units of the ZPL wavelength.

    :param a:   lattice constant
    :param r_h: hole radius
    :param d:   grating-layer etch depth
    :param u:   x-offset of the nearest hole center from the disk center
    :param v:   y-offset of the nearest hole center from the disk center
    """
    a: float
    r_h: float
    d: float
    u: float = 0.0
    v: float = 0.0

    def __post_init__(self):
        require_positive('a', self.a)
        require_positive('r_h', self.r_h)
        require_positive('d', self.d)
        if not 2 * self.r_h < self.a:
            raise InvalidParameterError(f'Holes overlap: 2*r_h={2 * self.r_h:g} >= a={self.a:g}')

    @property
    def is_centered(self) -> bool:
        return self.u == 0 and self.v == 0

    def with_alignment(self, u: float, v: float) -> LatticeSpec:
        return LatticeSpec(self.a, self.r_h, self.d, u, v)


@dataclass(frozen=True)
class HolePosition:
    x: float
    y: float
    trace_index: int|None = None

    @property
    def distance(self) -> float:
        return math.hypot(self.x, self.y)

    @property
    def angle(self) -> float:
        return math.atan2(self.y, self.x) % (2 * math.pi)


def positions_of(holes: List[HolePosition]) -> np.ndarray:
    return np.array([(h.x, h.y) for h in holes], dtype=float).reshape(-1, 2)


def generate_lattice(spec: LatticeSpec, extent: float) -> List[HolePosition]:
    require_positive('extent', extent)
    require_positive('a', spec.a)

    nmax = int(math.ceil((extent + abs(spec.u) + abs(spec.v)) / (spec.a * math.sqrt(3) / 2))) + 1
    n1, n2 = _index_mesh(nmax)
    xy = spec.a * (np.outer(n1, BASIS[0]) + np.outer(n2, BASIS[1])) - (spec.u, spec.v)

    dist = np.hypot(xy[:, 0], xy[:, 1])
    keep = dist <= extent + DISTANCE_TOLERANCE
    xy, dist, n1, n2 = xy[keep], dist[keep], n1[keep], n2[keep]

    traces = _hex_distance(n1, n2) if spec.is_centered else None
    order = _polar_order(xy, dist)
    return [HolePosition(float(xy[i, 0]), float(xy[i, 1]),
                         int(traces[i]) if traces is not None else None)
            for i in order]


def hex_trace(n: int, a: float) -> List[HolePosition]:
    """
    Perimeter of the ``n``-th hexagon around a lattice point; exactly ``6n``
    points, ordered counterclockwise starting from the corner on the +x axis.
    Use `HolePosition.distance` for the distance annotation.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameterError(f'Trace index must be a positive integer, got {n!r}')
    require_positive('a', a)

    n1, n2 = _index_mesh(n)
    on_trace = _hex_distance(n1, n2) == n
    n1, n2 = n1[on_trace], n2[on_trace]
    xy = a * (np.outer(n1, BASIS[0]) + np.outer(n2, BASIS[1]))

    angles = np.mod(np.arctan2(xy[:, 1], xy[:, 0]), 2 * np.pi)
    angles[np.isclose(angles, 2 * np.pi)] = 0.0
    return [HolePosition(float(xy[i, 0]), float(xy[i, 1]), n) for i in np.argsort(angles, kind='stable')]


def _index_mesh(nmax: int) -> tuple[np.ndarray, np.ndarray]:
    r = np.arange(-nmax, nmax + 1)
    n1, n2 = np.meshgrid(r, r, indexing='ij')
    return n1.ravel(), n2.ravel()


def _hex_distance(n1: np.ndarray, n2: np.ndarray) -> np.ndarray:
    return np.maximum(np.maximum(np.abs(n1), np.abs(n2)), np.abs(n1 + n2))


def _polar_order(xy: np.ndarray, dist: np.ndarray) -> np.ndarray:
    # distance first (ties grouped within tolerance), then counterclockwise angle
    dist_key = np.round(dist / DISTANCE_TOLERANCE) * DISTANCE_TOLERANCE
    angles = np.mod(np.arctan2(xy[:, 1], xy[:, 0]), 2 * np.pi)
    angles[np.isclose(angles, 2 * np.pi)] = 0.0
    return np.lexsort((angles, dist_key))
