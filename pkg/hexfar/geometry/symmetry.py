# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from typing import Dict, List, Tuple

import numpy as np

from .lattice import BASIS
from ..common import InvalidParameterError, require_positive

SECTOR = math.pi / 3
HALF_SECTOR = math.pi / 6
TAN_HALF_SECTOR = math.tan(HALF_SECTOR)

_REFLECT_HALF_SECTOR = np.array([[math.cos(SECTOR), math.sin(SECTOR)],
                                 [math.sin(SECTOR), -math.cos(SECTOR)]])


def symmetry_points(a: float) -> Dict[str, Tuple[float, float]]:
    require_positive('a', a)
    return {
        'A': (0.0, 0.0),
        'B': (a / 4, a * TAN_HALF_SECTOR / 4),
    }


def resolve_alignment(name: str, a: float) -> Tuple[float, float]:
    points = symmetry_points(a)
    try:
        return points[name.upper()]
    except KeyError:
        raise InvalidParameterError(f'Unknown alignment point {name!r}, expected one of: {", ".join(points)}')


def reduced_domain(a: float) -> Tuple[Tuple[float, float], Tuple[float, float], Tuple[float, float]]:
    """ Corners of the sweep domain {0 <= u <= a/4, 0 <= v <= u*tan(pi/6)}. """
    require_positive('a', a)
    return (0.0, 0.0), (a / 4, 0.0), symmetry_points(a)['B']


def in_reduced_domain(u: float, v: float, a: float, tol: float = 1e-12) -> bool:
    return -tol <= u <= a / 4 + tol and -tol <= v <= u * TAN_HALF_SECTOR + tol


def canonicalize_alignment(u: float, v: float, a: float) -> Tuple[float, float]:
    """
    Map an alignment offset onto its representative under lattice translations
    and the six-fold point group of the lattice.

    The representative lies in the wedge ``0 <= v <= u*tan(pi/6)`` of the
    Wigner-Seitz cell (``u <= a/2``). Offsets from the sweep domain of
    `reduced_domain` (``u <= a/4``) are returned unchanged.
    """
    require_positive('a', a)

    q = np.array([u, v], dtype=float) - _nearest_lattice_point(u, v, a)

    angle = math.atan2(q[1], q[0]) % (2 * math.pi)
    sector = int(angle // SECTOR) % 6
    if sector:
        q = _rotation(-sector * SECTOR) @ q

    if math.atan2(q[1], q[0]) > HALF_SECTOR:
        q = _REFLECT_HALF_SECTOR @ q

    cu, cv = float(q[0]), float(q[1])
    if abs(cv) < 1e-15 * a:
        cv = 0.0
    if abs(cu) < 1e-15 * a:
        cu = 0.0
    return cu, min(max(cv, 0.0), cu * TAN_HALF_SECTOR)


def point_group_images(u: float, v: float) -> List[Tuple[float, float]]:
    """ All 12 images of an offset under the rotations and mirrors about a lattice point. """
    images = []
    p = np.array([u, v], dtype=float)
    mirror = np.array([[1.0, 0.0], [0.0, -1.0]])
    for k in range(6):
        rot = _rotation(k * SECTOR)
        for q in (rot @ p, rot @ mirror @ p):
            images.append((float(q[0]), float(q[1])))
    return images


def _nearest_lattice_point(u: float, v: float, a: float) -> np.ndarray:
    frac = np.linalg.solve(BASIS.T * a, np.array([u, v], dtype=float))
    base = np.floor(frac)
    best, best_dist = None, math.inf
    for d1, d2 in ((0, 0), (1, 0), (0, 1), (1, 1)):
        point = a * ((base[0] + d1) * BASIS[0] + (base[1] + d2) * BASIS[1])
        dist = math.hypot(u - point[0], v - point[1])
        if dist < best_dist - 1e-12 * a:
            best, best_dist = point, dist
    return best


def _rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])
