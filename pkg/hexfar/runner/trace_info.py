# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from typing import List, Tuple

from pytermor import Spans

from ._abstract import ConfiguredRunner
from ..common import ArgumentError, NumericError
from ..console import Console
from ..geometry import DISTANCE_TOLERANCE, HolePosition, hex_trace
from ..mode import analytic_mode, import_nearfield, overlap_report


class TraceInfoRunner(ConfiguredRunner):
    """
    Hexagonal trace around the lattice point nearest to the disk center,
    shifted by the configured alignment, with the normalized field
    magnitude of the configured mode at every hole.
    """
    RESULT_FILE = 'trace_info.json'

    def run(self):
        lattice = self._config.lattice
        n = self._settings.trace
        if n < 1:
            raise ArgumentError(f'Trace index must be a positive integer, got {n}')
        # trace indices only hold for holes on lattice points
        index = n if lattice.is_centered else None
        holes = [HolePosition(h.x - lattice.u, h.y - lattice.v, index) for h in hex_trace(n, lattice.a)]
        overlaps = self._overlaps(holes)

        points = []
        for i, hole in enumerate(holes):
            point = {'x': hole.x, 'y': hole.y, 'distance': hole.distance, 'angle_deg': math.degrees(hole.angle),
                     'trace_index': hole.trace_index}
            if overlaps is not None:
                point['overlap'] = overlaps[i]
            points.append(point)

        shells = self._shells(n, lattice.a)
        self._output.write_json(self.RESULT_FILE, {
            'command': 'trace-info',
            'trace': n,
            'a': lattice.a,
            'u': lattice.u,
            'v': lattice.v,
            'count': len(holes),
            'shells': [{'radius': d * lattice.a, 'count': count} for d, count in shells],
            'points': points,
        })

        self._stdout.write_row('trace', f'n={n}  a={lattice.a:g}  {Spans.BOLD(str(len(holes)))} points')
        for d, count in shells:
            self._stdout.write_row('shell', f'{d * lattice.a:.6f} ({d:.6f}a)  x{count}')
        for i, hole in enumerate(holes):
            overlap = f'  |E| {Console.format_float(overlaps[i])}' if overlaps is not None else ''
            self._stdout.write_row(f'#{i}', f'{hole.x:+.6f} {hole.y:+.6f}  '
                                            f'{math.degrees(hole.angle):7.2f} deg{overlap}')

    def _overlaps(self, holes: List[HolePosition]) -> List[float]|None:
        config = self._config
        try:
            field = analytic_mode(config.disk, config.mode) if config.is_analytic else import_nearfield(config.nearfield)
            return [o.magnitude for o in overlap_report(field, holes)]
        except NumericError as e:
            Console.warn(f'No overlap magnitudes: {e}')
            return None

    @staticmethod
    def _shells(n: int, a: float) -> List[Tuple[float, int]]:
        """ Distinct distances from the trace center in units of ``a``, with multiplicities. """
        reduced = sorted(h.distance for h in hex_trace(n, a))
        shells: List[Tuple[float, int]] = []
        for r in reduced:
            if shells and abs(r / a - shells[-1][0]) < DISTANCE_TOLERANCE:
                shells[-1] = (shells[-1][0], shells[-1][1] + 1)
            else:
                shells.append((r / a, 1))
        return shells
