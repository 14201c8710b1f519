# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from .spec import SweepSpec, SweepParam, Metric, Distribution, DistributionKind, RobustnessSpec, SweepResult, \
    RefinedArgmax, DEFAULT_SAMPLE_COUNT, HEADLINE_THRESHOLD
from .pipeline import Pipeline, PipelineResult
from .sweep import sweep, sweep_objective, refine_argmax
from .robustness import robustness, draw_samples, cumulative_fraction, RobustnessResult, RobustnessSample
