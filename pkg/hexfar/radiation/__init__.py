# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from .grid import SphericalGrid, FarFieldGrid
from .dipole import dipole_farfield, EvalMode, Evaluation, FRAUNHOFER
from .ntf import SurfaceCurrents, ntf_surface, hertzian_dipole_fields, equivalent_currents, box_surface
from .power import Region, Hemisphere, total_power, collection_efficiency, efficiency_curve, upper_fraction, \
    FULL_SPHERE, DEFAULT_N_COLLECT
from .fit import AlphaFit, alpha_fit, apply_alpha, DEFAULT_THETA_MAX
from .farfile import write_farfield, read_farfield
