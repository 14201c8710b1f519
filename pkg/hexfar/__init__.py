# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from .common import ArgumentError, ConfigError, FormatError, InvalidParameterError, NumericError
from .version import __version__

from .arghelp import AppArgumentParser
from .app import App
