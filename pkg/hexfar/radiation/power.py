# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .grid import FarFieldGrid
from ..common import GridMismatchError, InvalidParameterError, UndefinedPowerError

DEFAULT_N_COLLECT = 1.4


class Hemisphere(Enum):
    UPPER = 'upper'
    LOWER = 'lower'


@dataclass(frozen=True)
class Region:
    """ Polar band ``theta_lo <= theta <= theta_hi`` over the full azimuth. """
    theta_lo: float = 0.0
    theta_hi: float = math.pi

    def __post_init__(self):
        if not 0 <= self.theta_lo <= self.theta_hi <= math.pi + 1e-12:
            raise InvalidParameterError(f'Invalid polar band [{self.theta_lo:g}, {self.theta_hi:g}]')

    @classmethod
    def full(cls) -> Region:
        return cls(0.0, math.pi)

    @classmethod
    def cone(cls, theta0: float) -> Region:
        return cls(0.0, theta0)

    @classmethod
    def annulus(cls, theta_lo: float, theta_hi: float) -> Region:
        return cls(theta_lo, theta_hi)


FULL_SPHERE = Region.full()


def total_power(ff: FarFieldGrid, region: Region = FULL_SPHERE) -> float:
    """
    Integral of ``S_r sin(theta)`` over the region. The trapezoid rule runs on
    the stored theta rows; band edges falling between rows are closed with a
    linearly interpolated integrand. The azimuthal integral is the periodic
    rectangle sum.
    """
    grid = ff.grid
    if not grid.is_periodic_in_phi:
        raise GridMismatchError('Power integrals need a grid covering the full azimuth')
    if not grid.covers_theta(region.theta_lo, region.theta_hi):
        raise GridMismatchError(f'Grid covers theta in [{grid.theta[0]:.6g}, {grid.theta[-1]:.6g}], '
                                f'region needs [{region.theta_lo:.6g}, {region.theta_hi:.6g}]')

    ring = _ring_integrand(ff)
    cumulative = cumulative_trapezoid(ring, grid.theta, initial=0.0)
    upper = _antiderivative(grid.theta, ring, cumulative, region.theta_hi)
    lower = _antiderivative(grid.theta, ring, cumulative, region.theta_lo)
    return max(upper - lower, 0.0)


def collection_efficiency(ff: FarFieldGrid, na: float, n_collect: float = DEFAULT_N_COLLECT,
                          hemisphere: Hemisphere|str = Hemisphere.UPPER) -> float:
    """
    Fraction of the total radiated power inside the acceptance cone of a
    numerical aperture, about +z (upper) or -z (lower).
    """
    return efficiency_curve(ff, [na], n_collect, hemisphere)[0][1]


def efficiency_curve(ff: FarFieldGrid, nas: Iterable[float], n_collect: float = DEFAULT_N_COLLECT,
                     hemisphere: Hemisphere|str = Hemisphere.UPPER) -> List[Tuple[float, float]]:
    hemisphere = Hemisphere(hemisphere)
    nas = [float(na) for na in nas]
    for na in nas:
        if not 0 < na <= n_collect:
            raise InvalidParameterError(f'Expected 0 < NA <= n_collect ({n_collect:g}), got NA={na:g}')

    total = total_power(ff)
    if not total > 0:
        raise UndefinedPowerError('Total radiated power is zero, collection efficiency is undefined')

    curve = []
    for na in nas:
        theta0 = math.asin(min(na / n_collect, 1.0))
        if hemisphere is Hemisphere.UPPER:
            region = Region.cone(theta0)
        else:
            region = Region.annulus(math.pi - theta0, math.pi)
        curve.append((na, min(max(total_power(ff, region) / total, 0.0), 1.0)))
    return curve


def upper_fraction(ff: FarFieldGrid) -> float:
    total = total_power(ff)
    if not total > 0:
        raise UndefinedPowerError('Total radiated power is zero')
    return total_power(ff, Region.cone(math.pi / 2)) / total


def _ring_integrand(ff: FarFieldGrid) -> np.ndarray:
    return np.sum(ff.s_r, axis=1) * ff.grid.dphi * np.sin(ff.grid.theta)


def _antiderivative(theta: np.ndarray, f: np.ndarray, cumulative: np.ndarray, t: float) -> float:
    t = min(max(t, theta[0]), theta[-1])
    i = min(int(np.searchsorted(theta, t, side='right')) - 1, len(theta) - 2)
    h = t - theta[i]
    if h <= 0:
        return float(cumulative[i])
    f_t = f[i] + (f[i + 1] - f[i]) * h / (theta[i + 1] - theta[i])
    return float(cumulative[i] + 0.5 * (f[i] + f_t) * h)
