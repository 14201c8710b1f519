# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import csv
import json
import math
import os
from typing import Any, Iterable, Sequence

import numpy as np
from pytermor import Seqs, Spans

from ..common import ConfigError
from ..console import ConsoleDebugBuffer

_debug_buffer = ConsoleDebugBuffer('output', Seqs.MAGENTA)


class OutputWriter:
    """
    Data files of one command. JSON documents get the config hash injected;
    floats are written with `repr` so reruns produce identical bytes.
    """

    def __init__(self, directory: str, config_hash: str):
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as e:
            raise ConfigError(f'Cannot create output directory {directory!r}: {e.strerror}') from e
        self._directory = directory
        self._config_hash = config_hash

    @property
    def directory(self) -> str:
        return self._directory

    @property
    def config_hash(self) -> str:
        return self._config_hash

    def path(self, name: str) -> str:
        return os.path.join(self._directory, name)

    def write_json(self, name: str, data: dict) -> str:
        filename = self.path(name)
        payload = to_jsonable({'config_hash': self._config_hash, **data})
        with open(filename, 'wt', encoding='utf-8') as f:
            json.dump(payload, f, indent=2, sort_keys=True, allow_nan=False)
            f.write('\n')
        _debug_buffer.write(1, f'Wrote {Spans.BOLD(filename)}')
        return filename

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        filename = self.path(name)
        with open(filename, 'wt', newline='', encoding='ascii') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_cell(v) for v in row])
        _debug_buffer.write(1, f'Wrote {Spans.BOLD(filename)}')
        return filename


def format_cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (float, np.floating)):
        return '' if math.isnan(value) else repr(float(value))
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


def to_jsonable(value: Any) -> Any:
    """ NaN becomes null; numpy scalars and arrays become plain values. """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return None if not math.isfinite(value) else float(value)
    return value
