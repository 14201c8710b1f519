# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import csv
import math
from typing import Dict, List

import numpy as np
from pytermor import Seqs, Spans

from .grid import FarFieldGrid, SphericalGrid
from ..common import FormatError, InvalidParameterError
from ..console import ConsoleDebugBuffer
from ..mode import DEFAULT_N_MEDIUM, impedance, wavenumber

HEADER_KEYS = ('ntheta', 'nphi', 'dtheta_deg', 'dphi_deg')
OPTIONAL_KEYS = ('eta_med', 'k')
COLUMNS = ('theta_deg', 'phi_deg', 're_e_theta', 'im_e_theta', 're_e_phi', 'im_e_phi', 's_r')
ANGLE_TOLERANCE_DEG = 1e-7

_debug_buffer = ConsoleDebugBuffer('farfile', Seqs.MAGENTA)


def write_farfield(ff: FarFieldGrid, filename: str):
    """
    CSV with ``<key>,<value>`` header rows (`HEADER_KEYS`, then `OPTIONAL_KEYS`), a column
    header row and one row per grid point, theta-major.
    """
    grid = ff.grid
    theta_deg = np.degrees(grid.theta)
    phi_deg = np.degrees(grid.phi)

    with open(filename, 'wt', newline='', encoding='ascii') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(('ntheta', grid.shape[0]))
        writer.writerow(('nphi', grid.shape[1]))
        writer.writerow(('dtheta_deg', repr(grid.dtheta_deg)))
        writer.writerow(('dphi_deg', repr(grid.dphi_deg)))
        writer.writerow(('eta_med', repr(float(ff.eta_med))))
        writer.writerow(('k', repr(float(ff.k))))
        writer.writerow(COLUMNS)
        for i, theta in enumerate(theta_deg):
            for j, phi in enumerate(phi_deg):
                e_theta, e_phi = ff.e_theta[i, j], ff.e_phi[i, j]
                writer.writerow([repr(float(v)) for v in (theta, phi, e_theta.real, e_theta.imag,
                                                          e_phi.real, e_phi.imag, ff.s_r[i, j])])
    _debug_buffer.write(1, f'Wrote far field: {Spans.BOLD(filename)}')


def read_farfield(filename: str) -> FarFieldGrid:
    """
    Accepts the four required header rows alone, as external exports write
    them. ``eta_med`` and ``k`` default to the substrate medium and the
    column header row may be omitted. The ``s_r`` column is kept as stored.
    """
    try:
        f = open(filename, 'rt', newline='', encoding='ascii')
    except OSError as e:
        raise FormatError(f'Cannot open far-field file: {e.strerror}', path=filename) from e

    with f:
        reader = csv.reader(f)
        header: Dict[str, float] = {}
        rows: List[List[float]] = []

        for row_num, row in enumerate(reader, start=1):
            if not row or row[0].startswith('#'):
                continue
            key = row[0].strip()
            if len(header) < len(HEADER_KEYS):
                _parse_header_row(row, row_num, header, HEADER_KEYS[len(header)], filename)
            elif rows:
                rows.append(_parse_data_row(row, row_num, filename))
            elif key in OPTIONAL_KEYS and key not in header:
                _parse_header_row(row, row_num, header, key, filename)
            elif key == COLUMNS[0]:
                if tuple(c.strip() for c in row) != COLUMNS:
                    raise FormatError(f'Expected column header {",".join(COLUMNS)}', row=row_num, path=filename)
            else:
                rows.append(_parse_data_row(row, row_num, filename))

    if len(header) < len(HEADER_KEYS):
        raise FormatError('Incomplete header', path=filename)
    ff = _assemble(header, rows, filename)
    _debug_buffer.write(1, f'Read far field: {Spans.BOLD(filename)} ({ff.grid.shape[0]}x{ff.grid.shape[1]})')
    return ff


def _parse_header_row(row: List[str], row_num: int, header: Dict[str, float], expected: str, filename: str):
    if len(row) != 2 or row[0].strip() != expected:
        raise FormatError(f'Expected header row "{expected},<value>"', row=row_num, path=filename)
    try:
        value = int(row[1]) if expected in ('ntheta', 'nphi') else float(row[1])
    except ValueError as e:
        raise FormatError(f'Invalid value for {expected!r}: {row[1]!r}', row=row_num, path=filename) from e
    header[expected] = value


def _parse_data_row(row: List[str], row_num: int, filename: str) -> List[float]:
    if len(row) != len(COLUMNS):
        raise FormatError(f'Expected {len(COLUMNS)} columns, got {len(row)}', row=row_num, path=filename)
    try:
        values = [float(v) for v in row]
    except ValueError as e:
        raise FormatError('Non-numeric value', row=row_num, path=filename) from e
    if not all(math.isfinite(v) for v in values):
        raise FormatError('NaN or infinite value', row=row_num, path=filename)
    return values


def _assemble(header: Dict[str, float], rows: List[List[float]], filename: str) -> FarFieldGrid:
    ntheta, nphi = int(header['ntheta']), int(header['nphi'])
    if len(rows) != ntheta * nphi:
        raise FormatError(f'Expected {ntheta * nphi} data rows for a {ntheta}x{nphi} grid, got {len(rows)}',
                          path=filename)

    data = np.array(rows, dtype=float).reshape(ntheta, nphi, len(COLUMNS))
    theta_deg = data[0, 0, 0] + header['dtheta_deg'] * np.arange(ntheta)
    phi_deg = data[0, 0, 1] + header['dphi_deg'] * np.arange(nphi)
    if not (np.allclose(data[:, :, 0], theta_deg[:, None], rtol=0, atol=ANGLE_TOLERANCE_DEG)
            and np.allclose(data[:, :, 1], phi_deg[None, :], rtol=0, atol=ANGLE_TOLERANCE_DEG)):
        raise FormatError('Angles do not form the uniform theta-major grid declared in the header', path=filename)

    try:
        grid = SphericalGrid(np.radians(theta_deg), np.radians(phi_deg))
        return FarFieldGrid(grid, data[..., 2] + 1j * data[..., 3], data[..., 4] + 1j * data[..., 5],
                            header.get('eta_med', impedance(DEFAULT_N_MEDIUM)),
                            header.get('k', wavenumber(DEFAULT_N_MEDIUM)),
                            s_r=data[..., 6])
    except InvalidParameterError as e:
        raise FormatError(str(e), path=filename) from e
