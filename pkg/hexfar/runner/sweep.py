# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import dataclasses

from pytermor import Spans

from ._abstract import ConfiguredRunner
from ..common import ConfigError
from ..console import Console
from ..optimizer import Pipeline, refine_argmax, sweep, sweep_objective


class SweepRunner(ConfiguredRunner):
    CURVE_FILE = 'sweep.csv'
    SUMMARY_FILE = 'sweep_summary.json'

    def run(self):
        spec = self._config.sweep
        if spec is None:
            raise ConfigError('The config has no "sweep" section')
        refine = spec.refine or self._settings.refine

        pipeline = Pipeline(self._config, self._threads)
        result = sweep(dataclasses.replace(spec, refine=False), pipeline, self._threads)
        # the coarse curve is kept even if the refinement fails to bracket
        self._output.write_csv(self.CURVE_FILE, ('param', 'value', 'metric'),
                               ((spec.param.value, v, m) for v, m in zip(result.values, result.metrics)))
        if refine:
            result.refined = refine_argmax(result, sweep_objective(pipeline, spec), spec.tolerance)

        self._output.write_json(self.SUMMARY_FILE, {
            'command': 'sweep',
            'sweep': dataclasses.replace(spec, refine=refine).to_dict(),
            **result.to_dict(),
        })

        self._stdout.write_row('param', f'{spec.param.value} [{spec.lo:g}, {spec.hi:g}] x{spec.count}')
        self._stdout.write_row('argmax', f'{result.argmax_value:.6g}  '
                                         f'{spec.metric.value} {Console.format_float(result.best_metric)}')
        if result.refined:
            self._stdout.write_row('refined', f'{result.refined.value:.6g}  '
                                              f'{spec.metric.value} {Console.format_float(result.refined.metric)}')
        if result.errors:
            Console.warn(f'{len(result.errors)} sweep point(s) failed, see {self.SUMMARY_FILE}')
        self._stdout.write_row('output', Spans.BOLD(self._output.directory))
