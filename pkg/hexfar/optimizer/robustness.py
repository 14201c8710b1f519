# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List

import numpy as np
from pytermor import Seqs

from .pipeline import Pipeline
from .spec import HEADLINE_THRESHOLD, Metric, RobustnessSpec
from ..common import InvalidParameterError, NumericError, UndefinedPowerError
from ..console import ConsoleDebugBuffer
from ..geometry import BASIS, canonicalize_alignment

_debug_buffer = ConsoleDebugBuffer('mc', Seqs.YELLOW)


@dataclass(frozen=True)
class RobustnessSample:
    index: int
    params: Dict[str, float]
    metric: float|None
    error: str|None = None


@dataclass(frozen=True)
class RobustnessResult:
    spec: RobustnessSpec
    metric_kind: Metric
    samples: List[RobustnessSample]
    fractions: np.ndarray

    @property
    def thresholds(self) -> np.ndarray:
        return np.asarray(self.spec.thresholds)

    @property
    def failures(self) -> int:
        return sum(1 for s in self.samples if s.metric is None)

    @property
    def metrics(self) -> np.ndarray:
        return np.array([s.metric for s in self.samples if s.metric is not None], dtype=float)

    def summary(self) -> dict:
        metrics = self.metrics
        valid = len(metrics) > 0
        return {
            'seed': self.spec.seed,
            'count': self.spec.count,
            'metric': self.metric_kind.value,
            'evaluated': int(len(metrics)),
            'failures': self.failures,
            'mean': float(np.mean(metrics)) if valid else None,
            'min': float(np.min(metrics)) if valid else None,
            'max': float(np.max(metrics)) if valid else None,
            'fraction_above_0.40': float(cumulative_fraction(metrics, [HEADLINE_THRESHOLD])[0]) if valid else None,
        }


def cumulative_fraction(metrics: np.ndarray, thresholds) -> np.ndarray:
    """ Share of samples strictly above each threshold; zeros for an empty sample. """
    metrics = np.asarray(metrics, dtype=float)
    thresholds = np.asarray(thresholds, dtype=float)
    if len(metrics) == 0:
        return np.zeros(len(thresholds))
    return np.array([np.count_nonzero(metrics > t) / len(metrics) for t in thresholds])


def draw_samples(spec: RobustnessSpec, a: float, u: float, v: float) -> List[Dict[str, float]]:
    """
    Parameter tuples for every sample, drawn in sorted parameter order from a
    generator seeded once. Alignment offsets are canonicalized.
    """
    rng = np.random.default_rng(spec.seed)
    samples = []
    for _ in range(spec.count):
        params: Dict[str, float] = {}
        fractions = None
        for name in spec.parameter_order:
            drawn = spec.distributions[name].draw(rng)
            if name == 'alignment':
                fractions = drawn
            else:
                params[name] = drawn

        lattice_constant = params.get('a', a)
        if fractions is not None:
            offset = lattice_constant * (fractions[0] * BASIS[0] + fractions[1] * BASIS[1])
            params['u'], params['v'] = float(offset[0]), float(offset[1])
        if 'u' in params or 'v' in params:
            if lattice_constant > 0:
                params['u'], params['v'] = canonicalize_alignment(params.get('u', u), params.get('v', v),
                                                                  lattice_constant)
        samples.append(params)
    return samples


def robustness(spec: RobustnessSpec, pipeline: Pipeline, metric: Metric = Metric.ETA_COL,
               threads: int = 1) -> RobustnessResult:
    lattice = pipeline.config.lattice
    drawn = draw_samples(spec, lattice.a, lattice.u, lattice.v)
    _debug_buffer.write(1, f'Evaluating {len(drawn)} samples (seed {spec.seed}, '
                           f'varying {", ".join(spec.parameter_order) or "nothing"})')

    def evaluate(index: int) -> RobustnessSample:
        params = drawn[index]
        try:
            value = pipeline.evaluate(params, metric, threads=1)
        except UndefinedPowerError:
            value = 0.0
        except (InvalidParameterError, NumericError) as e:
            _debug_buffer.write(2, f'#{index}: {e.__class__.__name__}: {e}')
            return RobustnessSample(index, params, None, f'{e.__class__.__name__}: {e}')
        _debug_buffer.write(2, f'#{index}: {metric.value}={value:.6f}')
        return RobustnessSample(index, params, value)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            samples = list(executor.map(evaluate, range(len(drawn))))
    else:
        samples = [evaluate(i) for i in range(len(drawn))]

    valid = np.array([s.metric for s in samples if s.metric is not None], dtype=float)
    return RobustnessResult(spec, metric, samples, cumulative_fraction(valid, spec.thresholds))
