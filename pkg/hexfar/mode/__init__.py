# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from .spec import DiskSpec, ModeSpec, Polarization, ETA_0, wavenumber, impedance
from .nearfield import NearField, AnalyticNearField, GridNearField, Provenance, analytic_mode, sample_grid
from .gridfile import NearFieldReader, import_nearfield, write_nearfield, export_nearfield
from .dipoles import DipoleArray, HoleOverlap, sample_currents, overlap_report, DEFAULT_DIPOLE_LENGTH, \
    DEFAULT_N_MEDIUM
