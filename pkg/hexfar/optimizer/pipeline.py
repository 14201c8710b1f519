# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import List, Tuple, TYPE_CHECKING

from pytermor import Seqs

from .spec import Metric
from ..console import ConsoleDebugBuffer
from ..efficiency import eta_zpl
from ..geometry import HolePosition, generate_lattice
from ..mode import DipoleArray, NearField, analytic_mode, import_nearfield, sample_currents
from ..radiation import FarFieldGrid, dipole_farfield, efficiency_curve

if TYPE_CHECKING:
    from ..config import RunConfig

_debug_buffer = ConsoleDebugBuffer('pipeline', Seqs.GREEN)


@dataclass(frozen=True)
class PipelineResult:
    config: RunConfig
    holes: List[HolePosition]
    dipoles: DipoleArray
    farfield: FarFieldGrid
    efficiencies: List[Tuple[float, float]]

    @property
    def eta_zpl(self) -> float:
        return eta_zpl(self.config.purcell, self.config.color_center)

    def eta_col(self, na: float|None = None) -> float:
        if na is None:
            return self.efficiencies[0][1]
        for value, eta_col in self.efficiencies:
            if value == na:
                return eta_col
        return efficiency_curve(self.farfield, [na], self.config.n_collect)[0][1]

    def metric(self, metric: Metric, na: float|None = None) -> float:
        eta_col = self.eta_col(na)
        if metric is Metric.ETA:
            return self.eta_zpl * eta_col
        return eta_col


class Pipeline:
    """
    Geometry -> mode -> hole currents -> far field -> collection efficiency.
    An imported near field is read once and shared by all evaluations.
    """

    def __init__(self, config: RunConfig, threads: int = 1):
        self._config = config
        self._threads = threads
        self._imported: NearField|None = None
        self._lock = threading.Lock()

    @property
    def config(self) -> RunConfig:
        return self._config

    def nearfield(self, config: RunConfig) -> NearField:
        if config.is_analytic:
            return analytic_mode(config.disk, config.mode)
        with self._lock:
            if self._imported is None:
                self._imported = import_nearfield(config.nearfield)
            return self._imported

    def run(self, config: RunConfig|None = None, threads: int|None = None) -> PipelineResult:
        config = config or self._config
        threads = self._threads if threads is None else threads

        holes = generate_lattice(config.lattice, config.effective_extent)
        _debug_buffer.write(1, f'{len(holes)} holes within r={config.effective_extent:.4g} '
                               f'(a={config.lattice.a:.6g}, u={config.lattice.u:.6g}, v={config.lattice.v:.6g})')

        dipoles = sample_currents(self.nearfield(config), holes, config.include_z,
                                  n_medium=config.disk.n_sub, length=config.dipole_length)
        farfield = dipole_farfield(dipoles, config.spherical_grid(), config.evaluation, threads)
        efficiencies = efficiency_curve(farfield, config.na, config.n_collect)
        _debug_buffer.write(2, 'eta_col: ' + ', '.join(f'NA {na:g} -> {eta:.6f}' for na, eta in efficiencies))
        return PipelineResult(config, holes, dipoles, farfield, efficiencies)

    def evaluate(self, overrides: dict, metric: Metric = Metric.ETA_COL, threads: int|None = None) -> float:
        return self.run(self._config.with_parameters(overrides), threads).metric(metric)
