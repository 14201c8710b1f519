# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from ..common import InvalidParameterError

DEFAULT_SAMPLE_COUNT = 205
DEFAULT_TOLERANCE = 1e-4
HEADLINE_THRESHOLD = 0.40


class SweepParam(Enum):
    A = 'a'
    U = 'u'
    V = 'v'
    R_H = 'r_h'
    T = 't'
    NA = 'NA'


class Metric(Enum):
    ETA_COL = 'eta_col'
    ETA = 'eta'


@dataclass(frozen=True)
class SweepSpec:
    param: SweepParam
    lo: float
    hi: float
    count: int = 26
    metric: Metric = Metric.ETA_COL
    refine: bool = False
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        object.__setattr__(self, 'param', SweepParam(self.param))
        object.__setattr__(self, 'metric', Metric(self.metric))
        if not self.lo < self.hi:
            raise InvalidParameterError(f'Sweep range must satisfy lo < hi, got [{self.lo:g}, {self.hi:g}]')
        if not isinstance(self.count, int) or self.count < 3:
            raise InvalidParameterError(f'Sweep needs at least 3 samples, got {self.count!r}')
        if not self.tolerance > 0:
            raise InvalidParameterError(f'Refinement tolerance must be positive, got {self.tolerance!r}')

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)

    def to_dict(self) -> dict:
        return {
            'param': self.param.value,
            'lo': self.lo,
            'hi': self.hi,
            'count': self.count,
            'metric': self.metric.value,
            'refine': self.refine,
            'tolerance': self.tolerance,
        }


class DistributionKind(Enum):
    FIXED = 'fixed'
    UNIFORM = 'uniform'
    NORMAL = 'normal'
    CELL = 'cell'


@dataclass(frozen=True)
class Distribution:
    """
    ``uniform`` draws from ``mean +- width``; ``normal`` uses ``width`` as
    the standard deviation; ``cell`` draws an alignment offset uniformly over
    the primitive cell and ignores mean and width.
    """
    kind: DistributionKind
    mean: float = 0.0
    width: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'kind', DistributionKind(self.kind))
        if not self.width >= 0:
            raise InvalidParameterError(f'Distribution width must be non-negative, got {self.width!r}')

    def draw(self, rng: np.random.Generator) -> float|Tuple[float, float]:
        if self.kind is DistributionKind.CELL:
            return float(rng.random()), float(rng.random())
        if self.kind is DistributionKind.UNIFORM:
            return float(rng.uniform(self.mean - self.width, self.mean + self.width))
        if self.kind is DistributionKind.NORMAL:
            return float(rng.normal(self.mean, self.width))
        return self.mean

    def to_dict(self) -> dict:
        if self.kind is DistributionKind.CELL:
            return {'kind': self.kind.value}
        return {'kind': self.kind.value, 'mean': self.mean, 'width': self.width}


ROBUSTNESS_PARAMS = ('a', 'alignment', 'd', 'r_d', 'r_h', 't', 'u', 'v')


@dataclass(frozen=True)
class RobustnessSpec:
    seed: int
    distributions: Dict[str, Distribution] = field(default_factory=dict)
    count: int = DEFAULT_SAMPLE_COUNT
    thresholds: Tuple[float, ...] = tuple(np.round(np.linspace(0.0, 1.0, 101), 10))

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise InvalidParameterError(f'Robustness study needs an integer seed, got {self.seed!r}')
        if not isinstance(self.count, int) or self.count < 1:
            raise InvalidParameterError(f'Sample count must be a positive integer, got {self.count!r}')
        for name, dist in self.distributions.items():
            if name not in ROBUSTNESS_PARAMS:
                raise InvalidParameterError(f'Cannot vary {name!r}, expected one of: {", ".join(ROBUSTNESS_PARAMS)}')
            if (dist.kind is DistributionKind.CELL) != (name == 'alignment'):
                raise InvalidParameterError(f'The "cell" distribution applies to "alignment" only ({name!r})')
        if 'alignment' in self.distributions and ({'u', 'v'} & set(self.distributions)):
            raise InvalidParameterError('Vary either "alignment" or "u"/"v", not both')
        thresholds = tuple(float(t) for t in self.thresholds)
        if not thresholds or any(b <= a for a, b in zip(thresholds, thresholds[1:])):
            raise InvalidParameterError('Thresholds must be a non-empty increasing list')
        object.__setattr__(self, 'thresholds', thresholds)

    @property
    def parameter_order(self) -> List[str]:
        return sorted(self.distributions)

    def to_dict(self) -> dict:
        return {
            'seed': self.seed,
            'count': self.count,
            'distributions': {k: self.distributions[k].to_dict() for k in self.parameter_order},
            'thresholds': list(self.thresholds),
        }


@dataclass(frozen=True)
class RefinedArgmax:
    value: float
    metric: float
    interval: Tuple[float, float]
    evaluations: int


@dataclass
class SweepResult:
    spec: SweepSpec
    values: np.ndarray
    metrics: np.ndarray
    errors: Dict[int, str]
    argmax_index: int
    refined: RefinedArgmax|None = None

    @property
    def argmax_value(self) -> float:
        return float(self.values[self.argmax_index])

    @property
    def best_metric(self) -> float:
        return float(self.metrics[self.argmax_index])

    @property
    def is_interior(self) -> bool:
        return 0 < self.argmax_index < len(self.values) - 1

    def to_dict(self) -> dict:
        result = {
            'param': self.spec.param.value,
            'metric': self.spec.metric.value,
            'argmax': {'value': self.argmax_value, 'metric': self.best_metric, 'index': self.argmax_index},
            'failures': len(self.errors),
            'errors': {str(i): msg for i, msg in sorted(self.errors.items())},
        }
        if self.refined:
            result['refined'] = {
                'value': self.refined.value,
                'metric': self.refined.metric,
                'interval': list(self.refined.interval),
                'evaluations': self.refined.evaluations,
            }
        return result
