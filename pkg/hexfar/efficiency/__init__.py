# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from .centers import ColorCenter, NV, SIV, SNV, presets, resolve_center
from .report import EfficiencyReport, eta_zpl, eta_total
