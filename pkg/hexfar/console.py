# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import json
import sys
import traceback
from abc import ABCMeta, abstractmethod
from typing import Any, List

from pytermor import SequenceSGR, Seqs, Span, Spans

from .common import ArgumentError, get_exit_status
from .settings import Settings, SettingsManager


class AbstractConsoleBuffer(metaclass=ABCMeta):
    """
    Text collected by one component and written out on `flush`. Every buffer
    registers itself, so `Console.flush_buffers` drains pending output before
    an error report is printed.
    """

    def __init__(self):
        self._chunks: List[str] = []
        Console.register_buffer(self)

    def flush(self):
        if not self._chunks:
            return
        text = ''.join(self._chunks)
        self._chunks.clear()
        self._emit(text)

    def close(self):
        Console.unregister_buffer(self)

    def _append(self, s: str, flush: bool):
        self._chunks.append(s)
        if flush:
            self.flush()

    @abstractmethod
    def _emit(self, text: str): raise NotImplementedError


class ConsoleOutputBuffer(AbstractConsoleBuffer):
    """ Human-readable results of a command, one labelled row per value. """

    def write(self, s: str, end='\n', flush=True):
        self._append(f'{s}{end}', flush)

    def write_row(self, label: str, value: Any, flush=True):
        self.write(Console.format_prefix(label, Spans.GREEN) + str(value), flush=flush)

    def _emit(self, text: str):
        Console.print(text, end='')


class ConsoleDebugBuffer(AbstractConsoleBuffer):
    """
    Debug channel of one component. Messages above the ``-D`` level are
    dropped; level 1 traces pipeline stages and file I/O, level 2 single
    samples, level 3 the settings dump.
    """

    def __init__(self, channel: str|None = None, color: SequenceSGR = Seqs.GRAY):
        super().__init__()
        self._prefix = Console.format_prefix(channel, Span(color)) if channel else ''

    def write(self, level: int, s: str, end='\n', flush=True):
        if level <= Console.debug_level():
            self._append(f'{self._prefix}{s}{end}', flush)

    def _emit(self, text: str):
        Console.debug(text, end='')


class Console:
    FMT_WARNING = Span(Seqs.YELLOW)
    FMT_ERROR = Span(Seqs.HI_RED)
    FMT_TRACEBACK = Spans.RED
    LABEL_WIDTH = 10
    SEPARATOR = Spans.CYAN('│')

    buffers: List[AbstractConsoleBuffer] = list()

    @staticmethod
    def register_buffer(buffer: AbstractConsoleBuffer):
        Console.buffers.append(buffer)

    @staticmethod
    def unregister_buffer(buffer: AbstractConsoleBuffer):
        buffer.flush()
        if buffer in Console.buffers:
            Console.buffers.remove(buffer)

    @staticmethod
    def flush_buffers():
        for buffer in Console.buffers:
            buffer.flush()

    @staticmethod
    def debug_level() -> int:
        settings: Settings|None = getattr(SettingsManager, 'app_settings', None)
        return settings.debug if settings is not None else 0

    @staticmethod
    def on_exception(e: Exception):
        Console.flush_buffers()
        summary = f'{e.__class__.__name__}: {e!s}'

        if isinstance(e, ArgumentError):
            Console.error(summary)
            Console.info(e.USAGE_MSG)
        elif Console.debug_level() > 0:
            frames = ''.join(traceback.format_exception(e.__class__, e, e.__traceback__)).rstrip('\n')
            trace, _, last = frames.rpartition('\n')
            Console.print(Console.FMT_TRACEBACK(trace), file=sys.stderr)
            Console.error(last)
        else:
            Console.error(summary)
            Console.info(f"Rerun with '{Spans.BOLD('-D')}' to see the traceback")

        settings: Settings|None = getattr(SettingsManager, 'app_settings', None)
        if settings is not None and settings.error_json:
            # stays the last stdout line, for wrappers that parse it
            Console.print(json.dumps({
                'error': e.__class__.__name__,
                'message': str(e),
                'exit_status': get_exit_status(e),
            }, sort_keys=True))

    @staticmethod
    def debug_settings():
        """ Settings that differ from the defaults are highlighted, defaults shown in brackets. """
        settings = SettingsManager.app_settings
        if not settings.debug_settings:
            return

        defaults = Settings()
        buffer = ConsoleDebugBuffer('settings', Seqs.BLUE)
        names = sorted(name for name in vars(settings) if not name.startswith('_'))
        width = max(map(len, names))
        for name in names:
            value, default = getattr(settings, name), getattr(defaults, name)
            if value == default:
                shown = Spans.YELLOW(str(default))
            else:
                shown = Spans.GREEN(str(value)) + ' ' + Spans.GRAY(f'[{default!s}]')
            buffer.write(3, name.rjust(width) + Console.SEPARATOR + shown)
        buffer.close()

    @staticmethod
    def format_prefix(label: str, f: Span) -> str:
        w = Console.LABEL_WIDTH
        return f(f'{label!s:>{w}.{w}s}') + Console.SEPARATOR

    @staticmethod
    def format_float(v: float, digits: int = 4) -> str:
        return Spans.BOLD(f'{v:.{digits}f}')

    @staticmethod
    def debug(s: str = '', end='\n'):
        Console.print(s, end=end, file=sys.stderr)

    @staticmethod
    def info(s: str = '', end='\n'):
        Console.print(s, end=end)

    @staticmethod
    def warn(s: str = '', end='\n'):
        Console.print(Console.FMT_WARNING(Spans.BOLD('WARN: ') + s), end=end, file=sys.stderr)

    @staticmethod
    def error(s: str = '', end='\n'):
        Console.print(Console.FMT_ERROR(Spans.BOLD('ERROR: ') + s), end=end, file=sys.stderr)

    @staticmethod
    def print(s: str, end='\n', **kwargs):
        print(s, end=end, **kwargs)
