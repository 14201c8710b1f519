# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from . import AbstractRunner, FitAlphaRunner, RobustnessRunner, SimulateRunner, SweepRunner, TraceInfoRunner, \
    VersionRunner
from ..common import ArgumentError
from ..settings import Command, SettingsManager


class RunnerFactory:
    RUNNERS = {
        Command.SIMULATE: SimulateRunner,
        Command.SWEEP: SweepRunner,
        Command.ROBUSTNESS: RobustnessRunner,
        Command.FIT_ALPHA: FitAlphaRunner,
        Command.TRACE_INFO: TraceInfoRunner,
    }

    @staticmethod
    def create() -> AbstractRunner:
        settings = SettingsManager.app_settings
        if settings.version:
            return VersionRunner()
        command = settings.effective_command
        if command is None:
            raise ArgumentError('No command specified')
        return RunnerFactory.RUNNERS[command]()
