# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from ._abstract import AbstractRunner, ConfiguredRunner
from .output import OutputWriter

from .fit_alpha import FitAlphaRunner
from .robustness import RobustnessRunner
from .simulate import SimulateRunner
from .sweep import SweepRunner
from .trace_info import TraceInfoRunner
from .version import VersionRunner

from .factory import RunnerFactory
