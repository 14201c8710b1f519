# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import FarFieldGrid
from .power import Region, total_power
from ..common import GridMismatchError, InvalidParameterError, UndefinedPowerError

DEFAULT_THETA_MAX = math.radians(70.0)


@dataclass(frozen=True)
class AlphaFit:
    alpha: float
    rmse: float
    theta_max: float

    def to_dict(self) -> dict:
        return {
            'alpha': self.alpha,
            'rmse': self.rmse,
            'theta_max_deg': math.degrees(self.theta_max),
        }


def alpha_fit(model: FarFieldGrid, reference: FarFieldGrid, theta_max: float = DEFAULT_THETA_MAX,
              normalize: bool = False) -> AlphaFit:
    """
    Least-squares scale between two radial Poynting patterns over
    ``theta <= theta_max``: ``alpha = <S_model, S_ref> / <S_model, S_model>``.

    With ``normalize`` both patterns are first divided by their own power
    inside the fit cone.
    """
    if not 0 < theta_max <= math.pi:
        raise InvalidParameterError(f'theta_max must lie in (0, pi], got {theta_max:g}')
    for name, ff in (('model', model), ('reference', reference)):
        if not ff.grid.covers_theta(0.0, theta_max):
            raise GridMismatchError(f'The {name} grid does not cover theta <= {math.degrees(theta_max):g} deg')

    rows = model.grid.rows_up_to(theta_max)
    if reference.grid.rows_up_to(theta_max) != rows or not model.grid.same_sampling(reference.grid, rows):
        raise GridMismatchError('Model and reference are sampled differently inside the fit region')

    s_model = model.s_r[:rows]
    s_ref = reference.s_r[:rows]
    if normalize:
        s_model = s_model / _cone_power(model, theta_max, 'model')
        s_ref = s_ref / _cone_power(reference, theta_max, 'reference')

    denominator = float(np.sum(s_model * s_model))
    if not denominator > 0:
        raise UndefinedPowerError('Model pattern is zero inside the fit region')

    alpha = max(float(np.sum(s_model * s_ref)) / denominator, 0.0)
    rmse = math.sqrt(float(np.mean((alpha * s_model - s_ref) ** 2)))
    return AlphaFit(alpha, rmse, theta_max)


def apply_alpha(ff: FarFieldGrid, alpha: float) -> FarFieldGrid:
    """ Copy of the pattern with ``S_r`` multiplied by ``alpha``. """
    if not alpha >= 0:
        raise InvalidParameterError(f'alpha must be non-negative, got {alpha!r}')
    return ff.scaled(math.sqrt(alpha))


def _cone_power(ff: FarFieldGrid, theta_max: float, name: str) -> float:
    power = total_power(ff, Region.cone(theta_max))
    if not power > 0:
        raise UndefinedPowerError(f'The {name} pattern carries no power inside the fit region')
    return power
