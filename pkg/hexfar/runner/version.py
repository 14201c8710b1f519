# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
import numpy
import pytermor
import scipy

from ._abstract import AbstractRunner
from ..console import Console
from ..version import __version__


class VersionRunner(AbstractRunner):
    def run(self):
        Console.info("es7s/hexfar".ljust(16) + __version__)
        Console.info("numpy".ljust(16) + numpy.__version__)
        Console.info("scipy".ljust(16) + scipy.__version__)
        Console.info("pytermor".ljust(16) + pytermor.__version__)
