# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np
from pytermor import Seqs

from .nearfield import NearField
from .spec import impedance, wavenumber
from ..common import InvalidParameterError, require_positive
from ..console import ConsoleDebugBuffer
from ..geometry import HolePosition, positions_of

DEFAULT_DIPOLE_LENGTH = 0.01
DEFAULT_N_MEDIUM = 1.4

_debug_buffer = ConsoleDebugBuffer('currents', Seqs.CYAN)


@dataclass(frozen=True, eq=False)
class DipoleArray:
    """
    Hertzian dipoles at hole centers.

    :param positions: ``(N, 3)`` positions in units of the ZPL wavelength;
                      z = 0 is the grating mid-plane
    :param currents:  ``(N, 3)`` complex excitation currents (I_x, I_y, I_z)
    :param length:    dipole length, shared by all elements
    :param eta_med:   impedance of the radiating medium, ohms
    :param k:         wavenumber in the radiating medium, rad per wavelength
    """
    positions: np.ndarray
    currents: np.ndarray
    length: float
    eta_med: float
    k: float

    def __post_init__(self):
        positions = np.asarray(self.positions, dtype=float).reshape(-1, 3)
        currents = np.asarray(self.currents, dtype=complex).reshape(-1, 3)
        if len(positions) != len(currents):
            raise InvalidParameterError(f'{len(positions)} positions but {len(currents)} currents')
        if len(positions) and len(np.unique(positions, axis=0)) != len(positions):
            raise InvalidParameterError('Dipole positions must be distinct')
        require_positive('length', self.length)
        require_positive('k', self.k)
        require_positive('eta_med', self.eta_med)
        object.__setattr__(self, 'positions', positions)
        object.__setattr__(self, 'currents', currents)

    def __len__(self) -> int:
        return len(self.positions)

    def translated(self, d: np.ndarray) -> DipoleArray:
        return DipoleArray(self.positions + np.asarray(d, dtype=float), self.currents,
                           self.length, self.eta_med, self.k)

    def scaled(self, c: complex) -> DipoleArray:
        return DipoleArray(self.positions, self.currents * c, self.length, self.eta_med, self.k)

    def rotated(self, psi: float) -> DipoleArray:
        """ Rotate positions and current vectors about z. """
        c, s = np.cos(psi), np.sin(psi)
        rot = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
        return DipoleArray(self.positions @ rot.T, self.currents @ rot.T, self.length, self.eta_med, self.k)


@dataclass(frozen=True)
class HoleOverlap:
    hole: HolePosition
    magnitude: float


def sample_currents(field: NearField, holes: List[HolePosition], include_z: bool = False,
                    n_medium: float = DEFAULT_N_MEDIUM, length: float = DEFAULT_DIPOLE_LENGTH) -> DipoleArray:
    """
    Excitation current of every hole equals the incident field at its center
    (proportionality constant 1). With ``include_z`` off the out-of-plane
    component is dropped.
    """
    xy = positions_of(holes)
    currents = field(xy[:, 0], xy[:, 1]).copy()
    if not include_z:
        currents[:, 2] = 0

    positions = np.zeros((len(xy), 3))
    positions[:, :2] = xy

    _debug_buffer.write(2, f'Sampled {len(xy)} hole currents, max |I| = {np.abs(currents).max(initial=0):.6g}')
    return DipoleArray(positions, currents, length, impedance(n_medium), wavenumber(n_medium))


def overlap_report(field: NearField, holes: List[HolePosition]) -> List[HoleOverlap]:
    xy = positions_of(holes)
    magnitudes = np.linalg.norm(field(xy[:, 0], xy[:, 1]), axis=1)
    peak = magnitudes.max(initial=0.0)
    if peak > 0:
        magnitudes = magnitudes / peak
    return [HoleOverlap(hole, float(mag)) for hole, mag in zip(holes, magnitudes)]
