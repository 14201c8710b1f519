# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from abc import ABCMeta, abstractmethod

from .output import OutputWriter
from ..config import RunConfig, apply_overrides, load_config
from ..console import ConsoleOutputBuffer
from ..settings import Settings, SettingsManager


class AbstractRunner(metaclass=ABCMeta):
    @abstractmethod
    def run(self):
        pass

    def close(self):
        pass


class ConfiguredRunner(AbstractRunner, metaclass=ABCMeta):
    """
    Loads the run config, applies command-line overrides and prepares the
    output directory. Subclasses only compute and write.
    """

    def __init__(self):
        self._settings: Settings = SettingsManager.app_settings
        self._config: RunConfig = apply_overrides(load_config(self._settings.config), self._settings)
        self._threads: int = self._settings.effective_threads
        self._output = OutputWriter(self._settings.out, self._config.hash())
        self._stdout = ConsoleOutputBuffer()

    def close(self):
        self._stdout.close()

    @property
    def config(self) -> RunConfig:
        return self._config

    @property
    def output(self) -> OutputWriter:
        return self._output
