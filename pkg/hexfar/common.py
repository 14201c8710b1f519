# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from pytermor import Spans


class ArgumentError(Exception):
    USAGE_MSG = "Run the app with '" + Spans.BOLD('--help') + "' argument to see the usage"
    EXIT_STATUS = 2


class ConfigError(ArgumentError):
    pass


class FormatError(ArgumentError):
    def __init__(self, msg: str, row: int|None = None, path: str|None = None):
        self.row = row
        self.path = path
        location = ''
        if path:
            location += f'{path}: '
        if row is not None:
            location += f'row {row}: '
        super().__init__(location + msg)


class InvalidParameterError(ValueError):
    EXIT_STATUS = 3


class NumericError(RuntimeError):
    EXIT_STATUS = 3


class UndefinedPowerError(NumericError):
    pass


class NoBracketError(NumericError):
    pass


class FieldDomainError(NumericError):
    pass


class GridMismatchError(NumericError):
    pass


def get_exit_status(e: BaseException) -> int:
    return getattr(e, 'EXIT_STATUS', NumericError.EXIT_STATUS)


def require_positive(name: str, value: float):
    if not value > 0:
        raise InvalidParameterError(f'{name} must be positive, got {value!r}')
