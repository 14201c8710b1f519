# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from pytermor import Seqs
from scipy import constants

from .grid import FarFieldGrid, SphericalGrid
from ..common import InvalidParameterError, require_positive
from ..console import ConsoleDebugBuffer
from ..mode import impedance, wavenumber

ROW_BLOCK = 4
SOURCE_BLOCK = 512

_debug_buffer = ConsoleDebugBuffer('ntf', Seqs.BLUE)


@dataclass(frozen=True, eq=False)
class SurfaceCurrents:
    """
    Equivalent surface currents sampled on a plane or on a closed surface
    made of planar faces, all cells of the same area.

    :param points:    ``(N, 3)`` cell centers
    :param j_s:       ``(N, 3)`` electric surface current density
    :param m_s:       ``(N, 3)`` magnetic surface current density
    :param cell_area: area represented by one sample
    :param n_medium:  refractive index of the (non-magnetic) medium
    """
    points: np.ndarray
    j_s: np.ndarray
    m_s: np.ndarray
    cell_area: float
    n_medium: float = 1.0

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float).reshape(-1, 3)
        j_s = np.asarray(self.j_s, dtype=complex).reshape(-1, 3)
        m_s = np.asarray(self.m_s, dtype=complex).reshape(-1, 3)
        if not len(points) == len(j_s) == len(m_s):
            raise InvalidParameterError('Points and current arrays differ in length')
        if not (np.all(np.isfinite(j_s)) and np.all(np.isfinite(m_s))):
            raise InvalidParameterError('Surface currents contain NaN or infinite values')
        require_positive('cell_area', self.cell_area)
        require_positive('n_medium', self.n_medium)
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'j_s', j_s)
        object.__setattr__(self, 'm_s', m_s)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def mu(self) -> float:
        return constants.mu_0

    @property
    def epsilon(self) -> float:
        return constants.epsilon_0 * self.n_medium ** 2

    @property
    def eta(self) -> float:
        return impedance(self.n_medium)

    @property
    def k(self) -> float:
        return wavenumber(self.n_medium)

    def scaled(self, c: complex) -> SurfaceCurrents:
        return SurfaceCurrents(self.points, self.j_s * c, self.m_s * c, self.cell_area, self.n_medium)


def ntf_surface(sc: SurfaceCurrents, grid: SphericalGrid, threads: int = 1) -> FarFieldGrid:
    """
    Far-zone projection of planar equivalent currents through the radiation
    vectors N (from J_s) and L (from M_s).
    """
    if len(sc) == 0:
        raise InvalidParameterError('Surface current set is empty')

    blocks = [slice(i, min(i + ROW_BLOCK, len(grid.theta))) for i in range(0, len(grid.theta), ROW_BLOCK)]
    _debug_buffer.write(1, f'Projecting {len(sc)} surface samples onto a {grid.shape[0]}x{grid.shape[1]} grid')

    def evaluate(rows: slice):
        return _project_rows(sc, grid.theta[rows], grid.phi)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            parts = list(executor.map(evaluate, blocks))
    else:
        parts = [evaluate(rows) for rows in blocks]

    e_theta = np.concatenate([p[0] for p in parts], axis=0)
    e_phi = np.concatenate([p[1] for p in parts], axis=0)
    return FarFieldGrid(grid, e_theta, e_phi, sc.eta, sc.k)


def _project_rows(sc: SurfaceCurrents, theta: np.ndarray, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    tt, pp = np.meshgrid(theta, phi, indexing='ij')
    st, ct, sp, cp = np.sin(tt).ravel(), np.cos(tt).ravel(), np.sin(pp).ravel(), np.cos(pp).ravel()
    directions = np.stack([st * cp, st * sp, ct], axis=1)

    n_vec = np.zeros((len(directions), 3), dtype=complex)
    l_vec = np.zeros_like(n_vec)
    for start in range(0, len(sc), SOURCE_BLOCK):
        block = slice(start, start + SOURCE_BLOCK)
        points = sc.points[block]
        phase = np.exp(1j * sc.k * (directions[:, None, 0] * points[None, :, 0]
                                    + directions[:, None, 1] * points[None, :, 1]
                                    + directions[:, None, 2] * points[None, :, 2]))
        for c in range(3):
            n_vec[:, c] += np.sum(phase * sc.j_s[block, c][None, :], axis=1)
            l_vec[:, c] += np.sum(phase * sc.m_s[block, c][None, :], axis=1)
    n_vec *= sc.cell_area
    l_vec *= sc.cell_area

    n_theta = n_vec[:, 0] * ct * cp + n_vec[:, 1] * ct * sp - n_vec[:, 2] * st
    n_phi = -n_vec[:, 0] * sp + n_vec[:, 1] * cp
    l_theta = l_vec[:, 0] * ct * cp + l_vec[:, 1] * ct * sp - l_vec[:, 2] * st
    l_phi = -l_vec[:, 0] * sp + l_vec[:, 1] * cp

    factor = 1j * sc.k / (4 * math.pi)
    e_theta = -factor * (l_phi + sc.eta * n_theta)
    e_phi = factor * (l_theta - sc.eta * n_phi)
    return e_theta.reshape(tt.shape), e_phi.reshape(tt.shape)


def hertzian_dipole_fields(points: np.ndarray, position: np.ndarray, current: np.ndarray,
                           length: float = 0.01, n_medium: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """
    Exact E and H of a Hertzian dipole (all zones) at ``points``, time
    convention ``e^{jwt}``. Returns two ``(N, 3)`` complex arrays.
    """
    require_positive('length', length)
    points = np.asarray(points, dtype=float).reshape(-1, 3)
    current = np.asarray(current, dtype=complex).reshape(3)
    k, eta = wavenumber(n_medium), impedance(n_medium)

    rel = points - np.asarray(position, dtype=float).reshape(3)
    dist = np.linalg.norm(rel, axis=1)
    if np.any(dist == 0):
        raise InvalidParameterError('Field point coincides with the dipole')
    r_hat = rel / dist[:, None]
    kr = k * dist
    propagator = np.exp(-1j * kr)

    i_radial = (r_hat @ current)[:, None] * r_hat
    i_transverse = current[None, :] - i_radial

    h = (1j * k * length / (4 * math.pi * dist) * (1 + 1 / (1j * kr)) * propagator)[:, None] \
        * np.cross(current[None, :], r_hat)
    transverse = (-(1j * k / dist) * (1 + 1 / (1j * kr) - 1 / kr ** 2))[:, None] * i_transverse
    radial = (2 / dist ** 2 * (1 + 1 / (1j * kr)))[:, None] * i_radial
    e = (eta * length * propagator / (4 * math.pi))[:, None] * (transverse + radial)
    return e, h


def equivalent_currents(e: np.ndarray, h: np.ndarray,
                        normal: np.ndarray = (0.0, 0.0, 1.0)) -> tuple[np.ndarray, np.ndarray]:
    """
    ``J_s = n x H`` and ``M_s = -n x E``. ``normal`` is one outward vector
    for the whole surface or one per sample.
    """
    normal = np.asarray(normal, dtype=float)
    normal = normal / np.linalg.norm(normal, axis=-1, keepdims=True)
    return np.cross(normal, h), -np.cross(normal, e)


def box_surface(half_side: float, cells: int,
                center: np.ndarray = (0.0, 0.0, 0.0)) -> tuple[np.ndarray, np.ndarray, float]:
    """
    Cell centers and outward normals of a closed cube, ``cells x cells``
    per face. Returns ``(points, normals, cell_area)``.
    """
    require_positive('half_side', half_side)
    if not isinstance(cells, (int, np.integer)) or cells < 1:
        raise InvalidParameterError(f'Cells per face must be a positive integer, got {cells!r}')

    step = 2 * half_side / cells
    ticks = -half_side + step * (np.arange(cells) + 0.5)
    p, q = (g.ravel() for g in np.meshgrid(ticks, ticks, indexing='ij'))
    wall = np.full_like(p, half_side)

    points, normals = [], []
    for axis in range(3):
        for sign in (1.0, -1.0):
            face = np.empty((len(p), 3))
            face[:, axis] = sign * wall
            face[:, [c for c in range(3) if c != axis]] = np.stack([p, q], axis=1)
            normal = np.zeros(3)
            normal[axis] = sign
            points.append(face)
            normals.append(np.tile(normal, (len(p), 1)))
    return np.concatenate(points) + np.asarray(center, dtype=float), np.concatenate(normals), step ** 2
