# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict

import numpy as np
from pytermor import Seqs
from scipy.optimize import minimize_scalar

from .pipeline import Pipeline
from .spec import Metric, RefinedArgmax, SweepParam, SweepResult, SweepSpec
from ..common import InvalidParameterError, NoBracketError, NumericError, UndefinedPowerError
from ..console import ConsoleDebugBuffer
from ..radiation import efficiency_curve

_debug_buffer = ConsoleDebugBuffer('sweep', Seqs.YELLOW)


def sweep(spec: SweepSpec, pipeline: Pipeline, threads: int = 1) -> SweepResult:
    """
    Evaluate the metric on a uniform grid of one parameter. Failing points are
    recorded and left out of the argmax; a pattern without any radiated power
    counts as metric 0. The first of several equal maxima wins.
    """
    values = spec.values()
    if spec.param is SweepParam.NA:
        metrics, errors = _sweep_na(spec, pipeline, values)
    else:
        metrics, errors = _sweep_geometry(spec, pipeline, values, threads)

    if np.all(np.isnan(metrics)):
        raise NumericError(f'All {len(values)} sweep points failed, first error: {errors[min(errors)]}')

    result = SweepResult(spec, values, metrics, errors, int(np.nanargmax(metrics)))
    _debug_buffer.write(1, f'Sweep {spec.param.value}: argmax at {result.argmax_value:.6g} '
                           f'({spec.metric.value}={result.best_metric:.6f}), {len(errors)} failure(s)')
    if spec.refine:
        result.refined = refine_argmax(result, sweep_objective(pipeline, spec), spec.tolerance)
    return result


def refine_argmax(result: SweepResult, objective: Callable[[float], float],
                  tolerance: float|None = None) -> RefinedArgmax:
    """
    Golden-section search inside the two sweep cells around the coarse
    maximum. Never returns a point worse than the coarse best.
    """
    tolerance = result.spec.tolerance if tolerance is None else tolerance
    if not tolerance > 0:
        raise InvalidParameterError(f'Refinement tolerance must be positive, got {tolerance!r}')

    i, values, metrics = result.argmax_index, result.values, result.metrics
    if not result.is_interior:
        raise NoBracketError(f'Maximum lies at the sweep boundary ({result.spec.param.value}={values[i]:.6g}); '
                             f'widen the sweep range to bracket it')
    if not (metrics[i] > metrics[i - 1] and metrics[i] > metrics[i + 1]):
        raise NoBracketError(f'Maximum at {result.spec.param.value}={values[i]:.6g} is not strictly bracketed '
                             f'by its neighbours; refine the sweep grid')

    bracket = (float(values[i - 1]), float(values[i]), float(values[i + 1]))
    known = {float(values[j]): float(metrics[j]) for j in (i - 1, i, i + 1)}

    def negated(x) -> float:
        x = float(x)
        return -known[x] if x in known else -objective(x)

    optimum = minimize_scalar(negated, bracket=bracket, method='golden', options={'xtol': tolerance})
    value, metric = float(optimum.x), float(-optimum.fun)
    if not metric >= metrics[i]:
        value, metric = float(values[i]), float(metrics[i])

    _debug_buffer.write(1, f'Refined argmax: {value:.8g} ({metric:.6f}) after {optimum.nfev} evaluations')
    return RefinedArgmax(value, metric, (bracket[0], bracket[2]), int(optimum.nfev))


def sweep_objective(pipeline: Pipeline, spec: SweepSpec) -> Callable[[float], float]:
    """ Metric as a function of the swept parameter, for refinement outside `sweep`. """
    return lambda x: _evaluate_point(pipeline, spec, x)


def _sweep_geometry(spec: SweepSpec, pipeline: Pipeline, values: np.ndarray,
                    threads: int) -> tuple[np.ndarray, Dict[int, str]]:
    def evaluate(index: int):
        try:
            return _evaluate_point(pipeline, spec, float(values[index]), threads=1), None
        except (InvalidParameterError, NumericError) as e:
            return math.nan, f'{e.__class__.__name__}: {e}'

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(evaluate, range(len(values))))
    else:
        outcomes = [evaluate(i) for i in range(len(values))]

    metrics = np.array([m for m, _ in outcomes], dtype=float)
    errors = {i: err for i, (_, err) in enumerate(outcomes) if err is not None}
    for i, value in enumerate(values):
        _debug_buffer.write(2, f'{spec.param.value}={value:.6g} -> {metrics[i]:.6f}')
    return metrics, errors


def _sweep_na(spec: SweepSpec, pipeline: Pipeline, values: np.ndarray) -> tuple[np.ndarray, Dict[int, str]]:
    n_collect = pipeline.config.n_collect
    metrics = np.full(len(values), math.nan)
    errors: Dict[int, str] = {}
    valid = [i for i, na in enumerate(values) if 0 < na <= n_collect]
    for i in sorted(set(range(len(values))) - set(valid)):
        errors[i] = f'InvalidParameterError: NA={values[i]:g} lies outside (0, {n_collect:g}]'

    try:
        base = pipeline.run()
        curve = efficiency_curve(base.farfield, values[valid], n_collect)
        factor = base.eta_zpl if spec.metric is Metric.ETA else 1.0
    except UndefinedPowerError:
        curve, factor = [(values[i], 0.0) for i in valid], 1.0
    for i, (_, eta_col) in zip(valid, curve):
        metrics[i] = factor * eta_col
    return metrics, errors


def _evaluate_point(pipeline: Pipeline, spec: SweepSpec, value: float, threads: int|None = None) -> float:
    try:
        return pipeline.evaluate({spec.param.value: value}, spec.metric, threads)
    except UndefinedPowerError:
        return 0.0
