# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import os
from argparse import Namespace
from enum import Enum
from typing import Any, List


class Command(Enum):
    SIMULATE = 'simulate'
    SWEEP = 'sweep'
    ROBUSTNESS = 'robustness'
    FIT_ALPHA = 'fit-alpha'
    TRACE_INFO = 'trace-info'


class Settings(Namespace):
    def __init__(self, **kwargs: Any):
        super().__init__(**kwargs)

        self.command: str|None = None
        self.config: str|None = None  # bundled optimized.json
        self.out: str = 'out'
        self.seed: int|None = None
        self.threads: int = 1
        self.na: List[float]|None = None
        self.include_z: bool|None = None
        self.reference: str|None = None
        self.refine: bool = False
        self.trace: int = 3
        self.lattice_constant: float|None = None
        self.debug: int = 0
        self.error_json: bool = False
        self.version: bool = False

    @property
    def effective_command(self) -> Command|None:
        if self.command is None:
            return None
        return Command(self.command)

    @property
    def effective_threads(self) -> int:
        if self.threads and self.threads > 0:
            return self.threads
        return os.cpu_count() or 1

    @property
    def debug_settings(self) -> bool:
        return self.debug >= 3


class SettingsManager:
    app_settings: Settings

    @staticmethod
    def init():
        SettingsManager.app_settings = Settings()
