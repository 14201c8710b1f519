# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import dataclasses
import hashlib
import json
import os
from dataclasses import dataclass
from importlib import resources
from typing import Any, Dict, Mapping, Tuple

import numpy as np
from pytermor import Seqs, Spans

from .common import ConfigError, InvalidParameterError
from .console import ConsoleDebugBuffer
from .efficiency import ColorCenter, SNV, resolve_center
from .geometry import LatticeSpec, resolve_alignment
from .mode import DEFAULT_DIPOLE_LENGTH, DiskSpec, ModeSpec, Polarization
from .optimizer.spec import Distribution, RobustnessSpec, SweepSpec
from .radiation import DEFAULT_N_COLLECT, EvalMode, Evaluation, FRAUNHOFER, SphericalGrid

ANALYTIC = 'analytic'
DEFAULT_CONFIG = 'optimized.json'
EXTENT_DECAY_LENGTHS = 5
LATTICE_PARAMETERS = ('a', 'r_h', 'd', 'u', 'v')
DISK_PARAMETERS = ('r_d', 't')
PARAMETERS = ('NA',) + LATTICE_PARAMETERS + DISK_PARAMETERS

_SECTIONS: Dict[str, Tuple[str, ...]] = {
    'disk': ('r_d', 't', 'r_u', 'n_disk', 'n_sub'),
    'lattice': ('a', 'r_h', 'd', 'u', 'v', 'alignment'),
    'mode': ('m', 'wavelength_nm', 'polarization', 'r_peak', 'radial_width', 'decay_length',
             'standing_wave', 'amplitude'),
    'grid': ('dtheta_deg', 'dphi_deg'),
    'evaluation': ('mode', 'radius'),
    'fit': ('theta_max_deg', 'normalize'),
    'sweep': ('param', 'lo', 'hi', 'count', 'metric', 'refine', 'tolerance'),
    'robustness': ('count', 'seed', 'distributions', 'thresholds'),
}
_SCALARS = ('nearfield', 'na', 'n_collect', 'include_z', 'lattice_extent', 'dipole_length',
            'color_center', 'purcell', 'reference')

_debug_buffer = ConsoleDebugBuffer('config', Seqs.BLUE)


@dataclass(frozen=True)
class RunConfig:
    """
    Physical description of one run. All lengths are in units of the ZPL
    wavelength, angles in degrees.
    """
    disk: DiskSpec
    lattice: LatticeSpec
    mode: ModeSpec = ModeSpec()
    alignment: str|None = None
    nearfield: str = ANALYTIC
    dtheta_deg: float = 0.5
    dphi_deg: float = 0.5
    evaluation: Evaluation = FRAUNHOFER
    na: Tuple[float, ...] = (0.7,)
    n_collect: float = DEFAULT_N_COLLECT
    include_z: bool = False
    lattice_extent: float|None = None
    dipole_length: float = DEFAULT_DIPOLE_LENGTH
    color_center: ColorCenter = SNV
    purcell: float = 52.6
    reference: str|None = None
    fit_theta_max_deg: float = 70.0
    fit_normalize: bool = False
    sweep: SweepSpec|None = None
    robustness: RobustnessSpec|None = None

    def __post_init__(self):
        if not self.na:
            raise InvalidParameterError('At least one NA value is required')
        for na in self.na:
            if not 0 < na <= self.n_collect:
                raise InvalidParameterError(f'Expected 0 < NA <= n_collect ({self.n_collect:g}), got {na:g}')
        if self.lattice_extent is not None and not self.lattice_extent > 0:
            raise InvalidParameterError(f'lattice_extent must be positive, got {self.lattice_extent!r}')
        if not self.purcell >= 0:
            raise InvalidParameterError(f'Purcell enhancement must be non-negative, got {self.purcell!r}')
        if not 0 < self.fit_theta_max_deg <= 180:
            raise InvalidParameterError(f'fit.theta_max_deg must lie in (0, 180], got {self.fit_theta_max_deg!r}')
        self.mode.peak_radius(self.disk)
        self.spherical_grid()

    @property
    def is_analytic(self) -> bool:
        return self.nearfield == ANALYTIC

    @property
    def effective_extent(self) -> float:
        if self.lattice_extent is not None:
            return self.lattice_extent
        return self.disk.r_d + EXTENT_DECAY_LENGTHS * self.mode.decay_length

    def spherical_grid(self) -> SphericalGrid:
        return SphericalGrid.uniform(self.dtheta_deg, self.dphi_deg)

    def replace(self, **changes) -> RunConfig:
        return dataclasses.replace(self, **changes)

    def with_parameter(self, name: str, value: float) -> RunConfig:
        """ Copy with one physical parameter changed; used by sweeps and sampling. """
        return self.with_parameters({name: value})

    def with_parameters(self, values: Mapping[str, float]) -> RunConfig:
        """
        Copy with several parameters changed at once. Each spec is rebuilt a
        single time, so only the final combination has to be valid.
        """
        unknown = sorted(set(values) - set(PARAMETERS))
        if unknown:
            raise InvalidParameterError(f'Unknown parameter {unknown[0]!r}')

        values = {name: float(v) for name, v in values.items()}
        changes: Dict[str, Any] = {}
        if 'NA' in values:
            changes['na'] = (values['NA'],)

        lattice = {name: values[name] for name in LATTICE_PARAMETERS if name in values}
        if lattice:
            if 'u' in lattice or 'v' in lattice:
                changes['alignment'] = None
            elif 'a' in lattice and self.alignment:
                lattice['u'], lattice['v'] = resolve_alignment(self.alignment, lattice['a'])
            changes['lattice'] = dataclasses.replace(self.lattice, **lattice)

        disk = {name: values[name] for name in DISK_PARAMETERS if name in values}
        if disk:
            changes['disk'] = dataclasses.replace(self.disk, **disk)
        return self.replace(**changes)

    def with_alignment(self, u: float, v: float) -> RunConfig:
        return self.replace(lattice=self.lattice.with_alignment(u, v), alignment=None)

    def to_dict(self) -> dict:
        lattice: Dict[str, Any] = {'a': self.lattice.a, 'r_h': self.lattice.r_h, 'd': self.lattice.d}
        if self.alignment:
            lattice['alignment'] = self.alignment
        else:
            lattice.update(u=self.lattice.u, v=self.lattice.v)

        evaluation: Dict[str, Any] = {'mode': self.evaluation.mode.value}
        if self.evaluation.mode is EvalMode.FINITE_RADIUS:
            evaluation['radius'] = self.evaluation.radius

        mode = dataclasses.asdict(self.mode)
        mode['polarization'] = self.mode.polarization.value

        return {
            'disk': dataclasses.asdict(self.disk),
            'lattice': lattice,
            'mode': mode,
            'nearfield': self.nearfield,
            'grid': {'dtheta_deg': self.dtheta_deg, 'dphi_deg': self.dphi_deg},
            'evaluation': evaluation,
            'na': list(self.na),
            'n_collect': self.n_collect,
            'include_z': self.include_z,
            'lattice_extent': self.effective_extent,
            'dipole_length': self.dipole_length,
            'color_center': self.color_center.to_dict(),
            'purcell': self.purcell,
            'reference': self.reference,
            'fit': {'theta_max_deg': self.fit_theta_max_deg, 'normalize': self.fit_normalize},
            'sweep': self.sweep.to_dict() if self.sweep else None,
            'robustness': self.robustness.to_dict() if self.robustness else None,
        }

    def hash(self) -> str:
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def load_config(path: str|None = None) -> RunConfig:
    if path is None:
        source = resources.files('hexfar.configs').joinpath(DEFAULT_CONFIG)
        text, base_dir, label = source.read_text(encoding='utf-8'), os.getcwd(), f'<bundled {DEFAULT_CONFIG}>'
    else:
        try:
            with open(path, 'rt', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise ConfigError(f'Cannot read config {path!r}: {e.strerror}') from e
        base_dir, label = os.path.dirname(os.path.abspath(path)), path

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f'{label}: invalid JSON at line {e.lineno}: {e.msg}') from e

    config = config_from_dict(data, base_dir, label)
    _debug_buffer.write(1, f'Loaded config: {Spans.BOLD(label)} ({config.hash()[:12]})')
    return config


def config_from_dict(data: Dict[str, Any], base_dir: str = '.', label: str = '<config>') -> RunConfig:
    try:
        return _build(data, base_dir)
    except ConfigError as e:
        raise ConfigError(f'{label}: {e}') from e
    except (InvalidParameterError, TypeError, ValueError, KeyError) as e:
        raise ConfigError(f'{label}: {e.__class__.__name__}: {e}') from e


def apply_overrides(config: RunConfig, settings) -> RunConfig:
    """ CLI flags win over the file. """
    changes: Dict[str, Any] = {}
    try:
        if settings.na:
            changes['na'] = tuple(float(na) for na in settings.na)
        if settings.include_z is not None:
            changes['include_z'] = bool(settings.include_z)
        if settings.reference:
            changes['reference'] = _existing_file(settings.reference, os.getcwd(), 'reference')
        if settings.seed is not None and config.robustness is not None:
            changes['robustness'] = dataclasses.replace(config.robustness, seed=int(settings.seed))
        config = config.replace(**changes)
        if settings.lattice_constant is not None:
            config = config.with_parameter('a', settings.lattice_constant)
    except InvalidParameterError as e:
        raise ConfigError(str(e)) from e
    return config


def _build(data: Dict[str, Any], base_dir: str) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError('Top-level JSON value must be an object')
    _check_keys('config', data, tuple(_SECTIONS) + _SCALARS)
    for section, keys in _SECTIONS.items():
        if data.get(section) is not None:
            if not isinstance(data[section], dict):
                raise ConfigError(f'"{section}" must be an object')
            _check_keys(section, data[section], keys)
    for required in ('disk', 'lattice'):
        if required not in data:
            raise ConfigError(f'Missing "{required}" section')

    disk = DiskSpec(**data['disk'])
    lattice_data = dict(data['lattice'])
    alignment = lattice_data.pop('alignment', None)
    if alignment is not None:
        if 'u' in lattice_data or 'v' in lattice_data:
            raise ConfigError('lattice: give either "alignment" or "u"/"v"')
        lattice_data['u'], lattice_data['v'] = resolve_alignment(str(alignment), lattice_data['a'])
        alignment = str(alignment).upper()
    lattice = LatticeSpec(**lattice_data)

    mode_data = dict(data.get('mode') or {})
    if 'polarization' in mode_data:
        mode_data['polarization'] = Polarization(mode_data['polarization'])
    mode = ModeSpec(**mode_data)

    nearfield = data.get('nearfield', ANALYTIC)
    if nearfield != ANALYTIC:
        nearfield = _existing_file(nearfield, base_dir, 'nearfield')
    reference = data.get('reference')
    if reference is not None:
        reference = _existing_file(reference, base_dir, 'reference')

    grid = data.get('grid') or {}
    evaluation_data = data.get('evaluation') or {}
    evaluation = Evaluation(EvalMode(evaluation_data.get('mode', EvalMode.FRAUNHOFER.value)),
                            evaluation_data.get('radius'))
    fit = data.get('fit') or {}

    kwargs: Dict[str, Any] = dict(
        disk=disk, lattice=lattice, mode=mode, alignment=alignment, nearfield=nearfield,
        dtheta_deg=float(grid.get('dtheta_deg', 0.5)), dphi_deg=float(grid.get('dphi_deg', 0.5)),
        evaluation=evaluation, reference=reference,
        fit_theta_max_deg=float(fit.get('theta_max_deg', 70.0)), fit_normalize=bool(fit.get('normalize', False)),
    )
    if 'na' in data:
        na = data['na']
        kwargs['na'] = tuple(float(v) for v in (na if isinstance(na, list) else [na]))
    for key in ('n_collect', 'lattice_extent', 'dipole_length', 'purcell'):
        if data.get(key) is not None:
            kwargs[key] = float(data[key])
    if 'include_z' in data:
        kwargs['include_z'] = _boolean(data['include_z'], 'include_z')
    if 'color_center' in data:
        kwargs['color_center'] = _color_center(data['color_center'])
    if data.get('sweep') is not None:
        kwargs['sweep'] = SweepSpec(**data['sweep'])
    if data.get('robustness') is not None:
        kwargs['robustness'] = _robustness(data['robustness'])
    return RunConfig(**kwargs)


def _check_keys(section: str, data: Dict[str, Any], allowed: Tuple[str, ...]):
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ConfigError(f'Unknown key(s) in "{section}": {", ".join(unknown)}')


def _existing_file(path: str, base_dir: str, key: str) -> str:
    resolved = path if os.path.isabs(path) else os.path.join(base_dir, path)
    if not os.path.isfile(resolved):
        raise ConfigError(f'"{key}" file does not exist: {resolved}')
    return os.path.normpath(resolved)


def _boolean(value: Any, key: str) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(f'"{key}" must be true or false, got {value!r}')
    return value


def _color_center(value: Any) -> ColorCenter:
    if isinstance(value, str):
        return resolve_center(value)
    if isinstance(value, dict):
        _check_keys('color_center', value, ('name', 'zpl_branching'))
        return ColorCenter(str(value['name']), float(value['zpl_branching']))
    raise ConfigError(f'"color_center" must be a preset name or an object, got {value!r}')


def _robustness(data: Dict[str, Any]) -> RobustnessSpec:
    if 'seed' not in data:
        raise ConfigError('robustness: "seed" is mandatory')
    distributions = {}
    for name, dist in (data.get('distributions') or {}).items():
        if not isinstance(dist, dict):
            raise ConfigError(f'robustness: distribution of {name!r} must be an object')
        _check_keys(f'distributions.{name}', dist, ('kind', 'mean', 'width'))
        distributions[name] = Distribution(**dist)

    kwargs: Dict[str, Any] = dict(seed=data['seed'], distributions=distributions)
    if 'count' in data:
        kwargs['count'] = data['count']
    thresholds = data.get('thresholds')
    if isinstance(thresholds, dict):
        _check_keys('thresholds', thresholds, ('lo', 'hi', 'count'))
        kwargs['thresholds'] = tuple(np.round(np.linspace(thresholds['lo'], thresholds['hi'],
                                                          int(thresholds['count'])), 10))
    elif thresholds is not None:
        kwargs['thresholds'] = tuple(thresholds)
    return RobustnessSpec(**kwargs)
