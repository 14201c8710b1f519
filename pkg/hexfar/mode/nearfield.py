# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from abc import ABCMeta, abstractmethod
from enum import Enum

import numpy as np
from pytermor import Seqs
from scipy.interpolate import RegularGridInterpolator

from .spec import DiskSpec, ModeSpec, Polarization
from ..common import FieldDomainError, InvalidParameterError
from ..console import ConsoleDebugBuffer

_debug_buffer = ConsoleDebugBuffer('nearfield', Seqs.MAGENTA)


class Provenance(Enum):
    ANALYTIC = 'analytic'
    IMPORTED = 'imported'


class NearField(metaclass=ABCMeta):
    """
    Complex electric field in the grating plane. Calling the instance with
    coordinate arrays returns an ``(N, 3)`` array of (E_x, E_y, E_z).
    """

    @property
    @abstractmethod
    def provenance(self) -> Provenance: raise NotImplementedError

    @abstractmethod
    def _evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray: raise NotImplementedError

    def covers(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.ones(np.shape(x), dtype=bool)

    def __call__(self, x, y) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        y = np.atleast_1d(np.asarray(y, dtype=float))
        if x.shape != y.shape:
            raise InvalidParameterError(f'Coordinate shapes differ: {x.shape} vs {y.shape}')

        inside = self.covers(x, y)
        if not np.all(inside):
            idx = int(np.argmin(inside))
            raise FieldDomainError(f'Point ({x[idx]:.6g}, {y[idx]:.6g}) lies outside the near-field extent')
        return self._evaluate(x, y)


class AnalyticNearField(NearField):
    """
    Whispering-gallery approximation ``E = e_pol(phi) * g(r) * A(phi)``:
    a Gaussian radial bump around ``r_peak`` continued by an exponential tail
    past the disk edge, times ``cos(m*phi)`` or ``exp(i*m*phi)``.
    """

    def __init__(self, disk: DiskSpec, mode: ModeSpec):
        self._disk = disk
        self._mode = mode
        self._r_peak = mode.peak_radius(disk)

    @property
    def provenance(self) -> Provenance:
        return Provenance.ANALYTIC

    @property
    def disk(self) -> DiskSpec:
        return self._disk

    @property
    def mode(self) -> ModeSpec:
        return self._mode

    def radial_profile(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        w = self._mode.radial_width
        r_d = self._disk.r_d

        def bump(rr):
            return np.exp(-(rr - self._r_peak) ** 2 / (2 * w ** 2))

        tail = bump(r_d) * np.exp(-(r - r_d) / self._mode.decay_length)
        return np.where(r <= r_d, bump(r), tail)

    def azimuthal_profile(self, phi: np.ndarray) -> np.ndarray:
        m = self._mode.m
        if self._mode.standing_wave:
            return np.cos(m * phi).astype(complex)
        return np.exp(1j * m * phi)

    def _evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        r = np.hypot(x, y)
        phi = np.arctan2(y, x)
        scalar = self._mode.amplitude * self.radial_profile(r) * self.azimuthal_profile(phi)

        result = np.zeros(x.shape + (3,), dtype=complex)
        pol = self._mode.polarization
        if pol is Polarization.AZIMUTHAL:
            result[..., 0] = -np.sin(phi) * scalar
            result[..., 1] = np.cos(phi) * scalar
        elif pol is Polarization.RADIAL:
            result[..., 0] = np.cos(phi) * scalar
            result[..., 1] = np.sin(phi) * scalar
        else:
            result[..., 2] = scalar
        return result


class GridNearField(NearField):
    """
    Bilinear interpolator over a uniformly sampled complex field. Queries
    outside the sampled rectangle are errors.
    """
    EDGE_TOLERANCE = 1e-9

    def __init__(self, xs: np.ndarray, ys: np.ndarray, values: np.ndarray):
        self._xs = np.asarray(xs, dtype=float)
        self._ys = np.asarray(ys, dtype=float)
        values = np.asarray(values, dtype=complex)
        if values.shape != (len(self._xs), len(self._ys), 3):
            raise InvalidParameterError(f'Expected field samples of shape {(len(self._xs), len(self._ys), 3)}, '
                                        f'got {values.shape}')
        if not np.all(np.isfinite(values)):
            raise InvalidParameterError('Near-field samples contain NaN or infinite values')

        self._values = values
        # real and imaginary parts interpolate independently
        self._interp_re = RegularGridInterpolator((self._xs, self._ys), values.real, method='linear')
        self._interp_im = RegularGridInterpolator((self._xs, self._ys), values.imag, method='linear')
        _debug_buffer.write(1, f'Grid near field: {len(self._xs)}x{len(self._ys)} samples, '
                               f'x=[{self._xs[0]:g}, {self._xs[-1]:g}], y=[{self._ys[0]:g}, {self._ys[-1]:g}]')

    @property
    def provenance(self) -> Provenance:
        return Provenance.IMPORTED

    @property
    def spacing(self) -> tuple[float, float]:
        return float(self._xs[1] - self._xs[0]), float(self._ys[1] - self._ys[0])

    @property
    def extent(self) -> tuple[float, float, float, float]:
        return float(self._xs[0]), float(self._xs[-1]), float(self._ys[0]), float(self._ys[-1])

    @property
    def interpolation_order(self) -> int:
        return 1

    @property
    def samples(self) -> np.ndarray:
        return self._values

    def scaled(self, c: complex) -> GridNearField:
        return GridNearField(self._xs, self._ys, self._values * c)

    def covers(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        tol = self.EDGE_TOLERANCE
        x0, x1, y0, y1 = self.extent
        return (x >= x0 - tol) & (x <= x1 + tol) & (y >= y0 - tol) & (y <= y1 + tol)

    def _evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x0, x1, y0, y1 = self.extent
        pts = np.stack([np.clip(x, x0, x1), np.clip(y, y0, y1)], axis=-1)
        return self._interp_re(pts) + 1j * self._interp_im(pts)


def analytic_mode(disk: DiskSpec, mode: ModeSpec) -> AnalyticNearField:
    return AnalyticNearField(disk, mode)


def sample_grid(field: NearField, half_extent: float, spacing: float) -> GridNearField:
    """ Tabulate any near field on a square grid centered on the disk. """
    if not half_extent > 0 or not spacing > 0:
        raise InvalidParameterError('Grid extent and spacing must be positive')
    n = int(round(2 * half_extent / spacing)) + 1
    axis = -half_extent + spacing * np.arange(n)
    xx, yy = np.meshgrid(axis, axis, indexing='ij')
    values = field(xx.ravel(), yy.ravel()).reshape(n, n, 3)
    return GridNearField(axis, axis, values)
