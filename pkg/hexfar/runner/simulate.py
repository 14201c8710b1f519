# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
import time

from pytermor import Spans

from ._abstract import ConfiguredRunner
from ..console import Console
from ..efficiency import EfficiencyReport
from ..optimizer import Pipeline
from ..radiation import AlphaFit, alpha_fit, read_farfield, upper_fraction, write_farfield


class SimulateRunner(ConfiguredRunner):
    FARFIELD_FILE = 'farfield.csv'
    REPORT_FILE = 'report.json'
    TIMING_FILE = 'timing.json'

    def run(self):
        config = self._config
        started = time.perf_counter()
        result = Pipeline(config, self._threads).run()
        elapsed = time.perf_counter() - started

        fit: AlphaFit|None = None
        if config.reference:
            reference = read_farfield(config.reference)
            fit = alpha_fit(result.farfield, reference, math.radians(config.fit_theta_max_deg), config.fit_normalize)

        reports = [EfficiencyReport.build(config.purcell, config.color_center, eta_col, na,
                                          fit.alpha if fit else None)
                   for na, eta_col in result.efficiencies]

        write_farfield(result.farfield, self._output.path(self.FARFIELD_FILE))
        self._output.write_json(self.REPORT_FILE, {
            'command': 'simulate',
            'color_center': config.color_center.to_dict(),
            'purcell': config.purcell,
            'eta_zpl': result.eta_zpl,
            'n_collect': config.n_collect,
            'dipole_count': len(result.dipoles),
            'upper_fraction': upper_fraction(result.farfield),
            'reports': [r.to_dict() for r in reports],
            'alpha_fit': fit.to_dict() if fit else None,
        })
        self._output.write_json(self.TIMING_FILE, {
            'command': 'simulate',
            'threads': self._threads,
            'pipeline_seconds': elapsed,
        })

        self._stdout.write_row('dipoles', len(result.dipoles))
        self._stdout.write_row('eta_zpl', Console.format_float(result.eta_zpl))
        for report in reports:
            self._stdout.write_row(f'NA {report.na:g}', f'eta_col {Console.format_float(report.eta_col)}  '
                                                        f'eta {Console.format_float(report.eta)}')
        if fit:
            self._stdout.write_row('alpha', f'{Console.format_float(fit.alpha)}  rmse {fit.rmse:.3g}')
        self._stdout.write_row('time', f'{elapsed:.3f}s')
        self._stdout.write_row('output', Spans.BOLD(self._output.directory))
