# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math

from ._abstract import ConfiguredRunner
from ..common import ConfigError
from ..console import Console
from ..optimizer import Pipeline
from ..radiation import alpha_fit, read_farfield


class FitAlphaRunner(ConfiguredRunner):
    RESULT_FILE = 'alpha.json'

    def run(self):
        config = self._config
        if not config.reference:
            raise ConfigError('fit-alpha needs a reference far field ("reference" in the config or --reference)')

        reference = read_farfield(config.reference)
        model = Pipeline(config, self._threads).run().farfield
        fit = alpha_fit(model, reference, math.radians(config.fit_theta_max_deg), config.fit_normalize)

        self._output.write_json(self.RESULT_FILE, {
            'command': 'fit-alpha',
            'reference': config.reference,
            'normalize': config.fit_normalize,
            **fit.to_dict(),
        })
        self._stdout.write_row('alpha', Console.format_float(fit.alpha))
        self._stdout.write_row('rmse', f'{fit.rmse:.6g}')
        self._stdout.write_row('theta_max', f'{math.degrees(fit.theta_max):g} deg')
