# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..common import InvalidParameterError, GridMismatchError, require_positive

ANGLE_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class SphericalGrid:
    """
    Uniform (theta, phi) sampling of the far-field sphere, radians.
    ``phi`` is periodic and never contains 2*pi itself.
    """
    theta: np.ndarray
    phi: np.ndarray

    def __post_init__(self):
        theta = np.asarray(self.theta, dtype=float)
        phi = np.asarray(self.phi, dtype=float)
        for name, axis, upper in (('theta', theta, math.pi), ('phi', phi, 2 * math.pi)):
            if axis.ndim != 1 or len(axis) < 2:
                raise InvalidParameterError(f'{name} axis needs at least 2 samples')
            steps = np.diff(axis)
            if not np.all(steps > 0):
                raise InvalidParameterError(f'{name} samples must be strictly increasing')
            if not np.allclose(steps, steps[0], rtol=1e-6, atol=0):
                raise InvalidParameterError(f'{name} samples must be uniformly spaced')
            if axis[0] < -ANGLE_TOLERANCE or axis[-1] > upper + ANGLE_TOLERANCE:
                raise InvalidParameterError(f'{name} samples outside [0, {upper:.6g}]')
        object.__setattr__(self, 'theta', theta)
        object.__setattr__(self, 'phi', phi)

    @classmethod
    def uniform(cls, dtheta_deg: float = 0.5, dphi_deg: float = 0.5,
                theta_max_deg: float = 180.0, theta_min_deg: float = 0.0) -> SphericalGrid:
        require_positive('dtheta_deg', dtheta_deg)
        require_positive('dphi_deg', dphi_deg)
        if not 0 <= theta_min_deg < theta_max_deg <= 180:
            raise InvalidParameterError(f'Invalid theta range [{theta_min_deg:g}, {theta_max_deg:g}] deg')

        ntheta = _whole_steps((theta_max_deg - theta_min_deg) / dtheta_deg, 'dtheta_deg') + 1
        nphi = _whole_steps(360.0 / dphi_deg, 'dphi_deg')
        theta = np.radians(theta_min_deg + dtheta_deg * np.arange(ntheta))
        phi = np.radians(dphi_deg * np.arange(nphi))
        return cls(theta, phi)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.theta), len(self.phi)

    @property
    def dtheta(self) -> float:
        return float(self.theta[1] - self.theta[0])

    @property
    def dphi(self) -> float:
        return float(self.phi[1] - self.phi[0])

    @property
    def dtheta_deg(self) -> float:
        return math.degrees(self.dtheta)

    @property
    def dphi_deg(self) -> float:
        return math.degrees(self.dphi)

    @property
    def is_periodic_in_phi(self) -> bool:
        return abs(len(self.phi) * self.dphi - 2 * math.pi) < 1e-6 and abs(self.phi[0]) < ANGLE_TOLERANCE

    @property
    def is_full_sphere(self) -> bool:
        return self.covers_theta(0.0, math.pi) and self.is_periodic_in_phi

    def covers_theta(self, lo: float, hi: float) -> bool:
        return self.theta[0] <= lo + ANGLE_TOLERANCE and hi <= self.theta[-1] + ANGLE_TOLERANCE

    def rows_up_to(self, theta_max: float) -> int:
        """ Number of leading theta rows with ``theta <= theta_max``. """
        return int(np.searchsorted(self.theta, theta_max + ANGLE_TOLERANCE, side='right'))

    def same_sampling(self, other: SphericalGrid, rows: int|None = None) -> bool:
        rows = rows if rows is not None else len(self.theta)
        if len(self.theta) < rows or len(other.theta) < rows or len(self.phi) != len(other.phi):
            return False
        return (np.allclose(self.theta[:rows], other.theta[:rows], rtol=0, atol=ANGLE_TOLERANCE)
                and np.allclose(self.phi, other.phi, rtol=0, atol=ANGLE_TOLERANCE))


@dataclass(frozen=True, eq=False)
class FarFieldGrid:
    """
    Far-zone transverse field on a spherical grid. The common ``e^{-jkR}/R``
    factor is dropped, so ``s_r`` is radiant intensity in arbitrary units.

    ``s_r`` defaults to ``(|E_theta|^2 + |E_phi|^2) / eta_med``. Patterns read
    from a file keep the stored column instead, which need not agree with the
    field components of an external export.
    """
    grid: SphericalGrid
    e_theta: np.ndarray
    e_phi: np.ndarray
    eta_med: float
    k: float
    s_r: np.ndarray|None = field(default=None, repr=False)

    def __post_init__(self):
        e_theta = np.asarray(self.e_theta, dtype=complex)
        e_phi = np.asarray(self.e_phi, dtype=complex)
        if e_theta.shape != self.grid.shape or e_phi.shape != self.grid.shape:
            raise GridMismatchError(f'Field arrays {e_theta.shape}, {e_phi.shape} do not match '
                                    f'grid {self.grid.shape}')
        require_positive('eta_med', self.eta_med)
        require_positive('k', self.k)

        if self.s_r is None:
            s_r = (np.abs(e_theta) ** 2 + np.abs(e_phi) ** 2) / self.eta_med
        else:
            s_r = np.asarray(self.s_r, dtype=float)
            if s_r.shape != self.grid.shape:
                raise GridMismatchError(f'S_r array {s_r.shape} does not match grid {self.grid.shape}')
            if not np.all(s_r >= 0):
                raise InvalidParameterError('S_r must be non-negative')
        object.__setattr__(self, 'e_theta', e_theta)
        object.__setattr__(self, 'e_phi', e_phi)
        object.__setattr__(self, 's_r', s_r)

    def scaled(self, c: complex) -> FarFieldGrid:
        return FarFieldGrid(self.grid, self.e_theta * c, self.e_phi * c, self.eta_med, self.k,
                            self.s_r * abs(c) ** 2)


def _whole_steps(ratio: float, name: str) -> int:
    steps = int(round(ratio))
    if steps < 1 or abs(ratio - steps) > 1e-9 * max(1.0, ratio):
        raise InvalidParameterError(f'{name} must divide the angular range into whole steps')
    return steps
