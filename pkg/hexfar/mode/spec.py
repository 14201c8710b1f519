# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from scipy import constants

from ..common import InvalidParameterError, require_positive

DEFAULT_PEAK_INSET = 0.25
ETA_0 = math.sqrt(constants.mu_0 / constants.epsilon_0)


class Polarization(Enum):
    AZIMUTHAL = 'azimuthal'
    RADIAL = 'radial'
    VERTICAL = 'vertical'


@dataclass(frozen=True)
class DiskSpec:
    """
    Diamond microdisk. Lengths in units of the ZPL wavelength.

    :param r_d:    disk radius
    :param t:      disk thickness
    :param r_u:    undercut radius
    :param n_disk: disk refractive index
    :param n_sub:  index of the substrate/grating side, also the radiating medium
    """
    r_d: float
    t: float
    r_u: float
    n_disk: float = 2.4
    n_sub: float = 1.4

    def __post_init__(self):
        require_positive('r_d', self.r_d)
        require_positive('t', self.t)
        require_positive('r_u', self.r_u)
        if self.r_u > self.r_d:
            raise InvalidParameterError(f'Undercut radius {self.r_u:g} exceeds disk radius {self.r_d:g}')
        if not self.n_disk > self.n_sub >= 1:
            raise InvalidParameterError(f'Expected n_disk > n_sub >= 1, got {self.n_disk:g}, {self.n_sub:g}')


@dataclass(frozen=True)
class ModeSpec:
    """
    Whispering-gallery mode of the bare disk. ``r_peak`` defaults to
    ``r_d - 0.25`` once a disk is known (see `peak_radius`).
    """
    m: int = 18
    wavelength_nm: float = 619.0
    polarization: Polarization = Polarization.AZIMUTHAL
    r_peak: float|None = None
    radial_width: float = 0.25
    decay_length: float = 0.1
    standing_wave: bool = True
    amplitude: float = 1.0

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise InvalidParameterError(f'Azimuthal mode number must be a non-negative integer, got {self.m!r}')
        require_positive('wavelength_nm', self.wavelength_nm)
        require_positive('radial_width', self.radial_width)
        require_positive('decay_length', self.decay_length)
        if self.r_peak is not None and self.r_peak < 0:
            raise InvalidParameterError(f'r_peak must be non-negative, got {self.r_peak:g}')
        if not isinstance(self.polarization, Polarization):
            object.__setattr__(self, 'polarization', Polarization(self.polarization))

    def peak_radius(self, disk: DiskSpec) -> float:
        r_peak = self.r_peak if self.r_peak is not None else disk.r_d - DEFAULT_PEAK_INSET
        if r_peak > disk.r_d:
            raise InvalidParameterError(f'r_peak={r_peak:g} lies outside the disk (r_d={disk.r_d:g})')
        return r_peak

    @property
    def omega(self) -> float:
        """ Angular frequency of the ZPL, rad/s. """
        return 2 * math.pi * constants.c / (self.wavelength_nm * 1e-9)


def wavenumber(n_medium: float) -> float:
    """ Wavenumber in a medium, in rad per ZPL wavelength. """
    return 2 * math.pi * n_medium


def impedance(n_medium: float) -> float:
    return ETA_0 / n_medium
