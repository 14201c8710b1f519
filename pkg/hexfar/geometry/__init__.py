# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from .lattice import LatticeSpec, HolePosition, generate_lattice, hex_trace, positions_of, BASIS, DISTANCE_TOLERANCE
from .symmetry import canonicalize_alignment, symmetry_points, reduced_domain, in_reduced_domain, \
    resolve_alignment, point_group_images
