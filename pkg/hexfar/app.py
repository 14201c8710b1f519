# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import sys

from .arghelp import AppArgumentParser
from .common import get_exit_status
from .console import Console
from .runner import RunnerFactory
from .settings import SettingsManager


# noinspection PyMethodMayBeStatic
class App:
    def run(self, argv: list[str]|None = None):
        try:
            self._parse_args(argv)  # help processing is handled by argparse
            runner = RunnerFactory.create()
            try:
                runner.run()
            finally:
                runner.close()
        except Exception as e:
            Console.on_exception(e)
            self._exit(get_exit_status(e))
        Console.flush_buffers()
        self._exit(0)

    def _parse_args(self, argv: list[str]|None):
        SettingsManager.init()
        AppArgumentParser().parse_args(argv, namespace=SettingsManager.app_settings)
        Console.debug_settings()

    def _exit(self, code: int):
        sys.exit(code)
