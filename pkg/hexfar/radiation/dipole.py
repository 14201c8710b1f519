# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np
from pytermor import Seqs

from .grid import FarFieldGrid, SphericalGrid
from ..common import InvalidParameterError, require_positive
from ..console import ConsoleDebugBuffer
from ..mode import DipoleArray

ROW_BLOCK = 16
MIN_RADIUS_RATIO = 100.0

_debug_buffer = ConsoleDebugBuffer('dipoles', Seqs.CYAN)


class EvalMode(Enum):
    FRAUNHOFER = 'fraunhofer'
    FINITE_RADIUS = 'finite_radius'


@dataclass(frozen=True)
class Evaluation:
    mode: EvalMode = EvalMode.FRAUNHOFER
    radius: float|None = None

    def __post_init__(self):
        if not isinstance(self.mode, EvalMode):
            object.__setattr__(self, 'mode', EvalMode(self.mode))
        if self.mode is EvalMode.FINITE_RADIUS:
            if self.radius is None:
                raise InvalidParameterError('Finite-radius evaluation needs a radius')
            require_positive('radius', self.radius)

    @classmethod
    def finite(cls, radius: float) -> Evaluation:
        return cls(EvalMode.FINITE_RADIUS, radius)


FRAUNHOFER = Evaluation()


def dipole_farfield(dipoles: DipoleArray, grid: SphericalGrid,
                    evaluation: Evaluation = FRAUNHOFER, threads: int = 1) -> FarFieldGrid:
    """
    Superpose the far fields of every Hertzian dipole in the array.

    In the Fraunhofer limit each dipole contributes with weight
    ``exp(+jk r.r'_n)``; with a finite observation radius R the exact path
    length is used, normalized by the common ``e^{-jkR}/R``.

    Rows of the grid are computed in fixed-size blocks, so the result does not
    depend on ``threads``.
    """
    if len(dipoles) == 0:
        raise InvalidParameterError('Dipole array is empty')
    if evaluation.mode is EvalMode.FINITE_RADIUS:
        r_max = float(np.max(np.linalg.norm(dipoles.positions, axis=1)))
        if evaluation.radius < MIN_RADIUS_RATIO * r_max:
            raise InvalidParameterError(f'Observation radius {evaluation.radius:g} is below '
                                        f'{MIN_RADIUS_RATIO:g} x max|r\'| = {MIN_RADIUS_RATIO * r_max:g}')

    blocks = [slice(i, min(i + ROW_BLOCK, len(grid.theta))) for i in range(0, len(grid.theta), ROW_BLOCK)]
    _debug_buffer.write(1, f'Evaluating {len(dipoles)} dipoles on a {grid.shape[0]}x{grid.shape[1]} grid '
                           f'({evaluation.mode.value}, {len(blocks)} blocks, {threads} thread(s))')

    def evaluate(rows: slice):
        return _evaluate_rows(dipoles, grid.theta[rows], grid.phi, evaluation)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            parts = list(executor.map(evaluate, blocks))
    else:
        parts = [evaluate(rows) for rows in blocks]

    e_theta = np.concatenate([p[0] for p in parts], axis=0)
    e_phi = np.concatenate([p[1] for p in parts], axis=0)
    return FarFieldGrid(grid, e_theta, e_phi, dipoles.eta_med, dipoles.k)


def _evaluate_rows(dipoles: DipoleArray, theta: np.ndarray, phi: np.ndarray,
                   evaluation: Evaluation) -> tuple[np.ndarray, np.ndarray]:
    st, ct = np.sin(theta)[:, None], np.cos(theta)[:, None]
    sp, cp = np.sin(phi)[None, :], np.cos(phi)[None, :]
    rx, ry, rz = st * cp, st * sp, ct * np.ones_like(sp)
    k = dipoles.k

    sx = np.zeros(rx.shape, dtype=complex)
    sy = np.zeros_like(sx)
    sz = np.zeros_like(sx)
    for (x, y, z), (ix, iy, iz) in zip(dipoles.positions, dipoles.currents):
        projection = rx * x + ry * y + rz * z
        if evaluation.mode is EvalMode.FRAUNHOFER:
            weight = np.exp(1j * k * projection)
        else:
            radius = evaluation.radius
            r2 = x * x + y * y + z * z
            distance = np.sqrt(radius * radius - 2 * radius * projection + r2)
            # distance - R without cancellation
            excess = (r2 - 2 * radius * projection) / (distance + radius)
            weight = np.exp(-1j * k * excess) * (radius / distance)
        sx += ix * weight
        sy += iy * weight
        sz += iz * weight

    scale = dipoles.eta_med * dipoles.length * k / (4 * math.pi * 1j)
    e_theta = scale * (sx * ct * cp + sy * ct * sp - sz * st)
    e_phi = scale * (-sx * sp + sy * cp)
    return e_theta, e_phi
