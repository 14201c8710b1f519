# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from ..common import InvalidParameterError


@dataclass(frozen=True)
class ColorCenter:
    """
    :param name:           emitter label
    :param zpl_branching:  ZPL share of the bare emitter's decay rate,
                           Gamma_ZPL,0 / Gamma_total,0
    """
    name: str
    zpl_branching: float

    def __post_init__(self):
        if not 0 < self.zpl_branching <= 1:
            raise InvalidParameterError(f'ZPL branching ratio of {self.name} must lie in (0, 1], '
                                        f'got {self.zpl_branching!r}')

    def to_dict(self) -> dict:
        return {'name': self.name, 'zpl_branching': self.zpl_branching}


NV = ColorCenter('NV', 0.03)
SIV = ColorCenter('SiV', 0.7)
SNV = ColorCenter('SnV', 0.8)

_PRESETS = {c.name: c for c in (NV, SIV, SNV)}


def presets() -> Dict[str, ColorCenter]:
    return dict(_PRESETS)


def resolve_center(name: str) -> ColorCenter:
    for key, center in _PRESETS.items():
        if key.lower() == name.lower():
            return center
    raise InvalidParameterError(f'Unknown color center {name!r}, expected one of: {", ".join(_PRESETS)}')
