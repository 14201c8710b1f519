# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from pytermor import Spans

from ._abstract import ConfiguredRunner
from ..common import ConfigError
from ..console import Console
from ..optimizer import HEADLINE_THRESHOLD, Metric, Pipeline, RobustnessResult, robustness


class RobustnessRunner(ConfiguredRunner):
    SAMPLES_FILE = 'robustness_samples.csv'
    CUMULATIVE_FILE = 'robustness_cumulative.csv'
    SUMMARY_FILE = 'robustness_summary.json'

    def run(self):
        spec = self._config.robustness
        if spec is None:
            raise ConfigError('The config has no "robustness" section')

        result = robustness(spec, Pipeline(self._config, self._threads), Metric.ETA_COL, self._threads)
        self._write_samples(result)
        self._output.write_csv(self.CUMULATIVE_FILE, ('threshold', 'fraction'),
                               zip(result.thresholds, result.fractions))
        summary = result.summary()
        self._output.write_json(self.SUMMARY_FILE, {
            'command': 'robustness',
            'robustness': spec.to_dict(),
            **summary,
        })

        self._stdout.write_row('seed', spec.seed)
        self._stdout.write_row('samples', f'{summary["evaluated"]} of {spec.count}')
        if summary['evaluated']:
            self._stdout.write_row('mean', Console.format_float(summary['mean']))
            self._stdout.write_row(f'> {HEADLINE_THRESHOLD:.2f}', Console.format_float(summary['fraction_above_0.40']))
        if result.failures:
            Console.warn(f'{result.failures} sample(s) failed, see {self.SAMPLES_FILE}')
        self._stdout.write_row('output', Spans.BOLD(self._output.directory))

    def _write_samples(self, result: RobustnessResult):
        params = sorted({name for sample in result.samples for name in sample.params})
        self._output.write_csv(
            self.SAMPLES_FILE, ('index', *params, result.metric_kind.value, 'error'),
            ((s.index, *(s.params.get(p) for p in params), s.metric, s.error) for s in result.samples))
