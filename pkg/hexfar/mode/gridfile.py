# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from typing import Dict, IO, List

import numpy as np
from pytermor import Spans, Seqs

from .nearfield import GridNearField, NearField, sample_grid
from ..common import FormatError
from ..console import ConsoleDebugBuffer

HEADER_KEYS = ('nx', 'ny', 'x0', 'y0', 'dx', 'dy')
RECORD_LEN = 6

_debug_buffer = ConsoleDebugBuffer('gridfile', Seqs.MAGENTA)


class NearFieldReader:
    """
    Plain-text near-field grid: six ``<key> <value>`` header lines
    (nx, ny, x0, y0, dx, dy), then nx*ny records of six floats
    (Re/Im of E_x, E_y, E_z), x varying fastest. Blank lines and lines
    starting with '#' are skipped.
    """

    def __init__(self, filename: str):
        self._filename = filename
        self._io: IO|None = None

    def read(self) -> GridNearField:
        self._open()
        try:
            header: Dict[str, float] = {}
            records: List[List[float]] = []

            for line_num, line in enumerate(self._io, start=1):
                line = line.strip()
                if not line or line.startswith('#'):
                    continue
                if len(header) < len(HEADER_KEYS):
                    self._parse_header_line(line, line_num, header)
                    continue
                records.append(self._parse_record(line, line_num))

            if len(header) < len(HEADER_KEYS):
                missing = [k for k in HEADER_KEYS if k not in header]
                raise FormatError(f'Missing header keys: {", ".join(missing)}', path=self._filename)

            return self._assemble(header, records)
        finally:
            self.close()

    def _open(self):
        try:
            self._io = open(self._filename, 'rt', encoding='ascii')
        except OSError as e:
            raise FormatError(f'Cannot open near-field file: {e.strerror}', path=self._filename) from e
        _debug_buffer.write(1, f'Opened file: {Spans.BOLD(self._filename)}')

    def _parse_header_line(self, line: str, line_num: int, header: Dict[str, float]):
        parts = line.split()
        if len(parts) != 2 or parts[0] not in HEADER_KEYS:
            raise FormatError(f'Expected header line "<{"|".join(HEADER_KEYS)}> <value>", got {line!r}',
                              row=line_num, path=self._filename)
        key, raw = parts
        if key in header:
            raise FormatError(f'Duplicate header key {key!r}', row=line_num, path=self._filename)
        try:
            value = int(raw) if key in ('nx', 'ny') else float(raw)
        except ValueError as e:
            raise FormatError(f'Invalid value for {key!r}: {raw!r}', row=line_num, path=self._filename) from e
        header[key] = value

    def _parse_record(self, line: str, line_num: int) -> List[float]:
        parts = line.split()
        if len(parts) != RECORD_LEN:
            raise FormatError(f'Expected {RECORD_LEN} values per record, got {len(parts)}',
                              row=line_num, path=self._filename)
        try:
            values = [float(p) for p in parts]
        except ValueError as e:
            raise FormatError(f'Non-numeric value in record: {line!r}', row=line_num, path=self._filename) from e
        if not all(math.isfinite(v) for v in values):
            raise FormatError('NaN or infinite sample', row=line_num, path=self._filename)
        return values

    def _assemble(self, header: Dict[str, float], records: List[List[float]]) -> GridNearField:
        nx, ny = int(header['nx']), int(header['ny'])
        dx, dy = header['dx'], header['dy']
        if nx < 2 or ny < 2:
            raise FormatError(f'Grid needs at least 2 samples per axis, got {nx}x{ny}', path=self._filename)
        if not (dx > 0 and dy > 0):
            raise FormatError(f'Grid spacing must be positive and uniform, got dx={dx:g}, dy={dy:g}',
                              path=self._filename)
        if len(records) != nx * ny:
            raise FormatError(f'Expected {nx * ny} records for a {nx}x{ny} grid, got {len(records)}',
                              path=self._filename)

        data = np.array(records, dtype=float).reshape(ny, nx, RECORD_LEN)
        values = (data[..., 0::2] + 1j * data[..., 1::2]).transpose(1, 0, 2)
        xs = header['x0'] + dx * np.arange(nx)
        ys = header['y0'] + dy * np.arange(ny)

        _debug_buffer.write(1, f'Read {Spans.BOLD(len(records))} records')
        return GridNearField(xs, ys, values)

    def close(self):
        if self._io and not self._io.closed:
            self._io.close()


def import_nearfield(filename: str) -> GridNearField:
    return NearFieldReader(filename).read()


def write_nearfield(grid: GridNearField, filename: str):
    x0, _, y0, _ = grid.extent
    dx, dy = grid.spacing
    values = grid.samples
    nx, ny = values.shape[0], values.shape[1]

    with open(filename, 'wt', encoding='ascii') as f:
        f.write(f'nx {nx}\nny {ny}\nx0 {x0!r}\ny0 {y0!r}\ndx {dx!r}\ndy {dy!r}\n')
        for iy in range(ny):
            for ix in range(nx):
                e = values[ix, iy]
                f.write(' '.join(repr(float(v)) for v in (e[0].real, e[0].imag, e[1].real, e[1].imag,
                                                          e[2].real, e[2].imag)) + '\n')


def export_nearfield(field: NearField, filename: str, half_extent: float, spacing: float) -> GridNearField:
    grid = sample_grid(field, half_extent, spacing)
    write_nearfield(grid, filename)
    return grid
