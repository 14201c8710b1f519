# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass

from .centers import ColorCenter
from ..common import InvalidParameterError


def eta_zpl(purcell: float, center: ColorCenter) -> float:
    """
    Share of emission routed into the ZPL once the cavity enhances the ZPL
    rate ``purcell`` times: ``F / (F + 1/b - 1)`` for branching ratio ``b``.
    """
    if not purcell >= 0:
        raise InvalidParameterError(f'Purcell enhancement must be non-negative, got {purcell!r}')
    if purcell == 0:
        return 0.0
    return purcell / (purcell + (1 / center.zpl_branching - 1))


def eta_total(eta_zpl_value: float, eta_col: float) -> float:
    for name, value in (('eta_zpl', eta_zpl_value), ('eta_col', eta_col)):
        if not 0 <= value <= 1:
            raise InvalidParameterError(f'{name} must lie in [0, 1], got {value!r}')
    return eta_zpl_value * eta_col


@dataclass(frozen=True)
class EfficiencyReport:
    purcell: float
    eta_zpl: float
    eta_col: float
    na: float
    alpha: float|None = None

    def __post_init__(self):
        eta_total(self.eta_zpl, self.eta_col)

    @property
    def eta(self) -> float:
        return self.eta_zpl * self.eta_col

    @classmethod
    def build(cls, purcell: float, center: ColorCenter, eta_col: float, na: float,
              alpha: float|None = None) -> EfficiencyReport:
        return cls(purcell, eta_zpl(purcell, center), eta_col, na, alpha)

    def to_dict(self) -> dict:
        return {
            'na': self.na,
            'purcell': self.purcell,
            'eta_zpl': self.eta_zpl,
            'eta_col': self.eta_col,
            'eta': self.eta,
            'alpha': self.alpha,
        }
