"""Steady MHD blood flow through a tapered, overlapping-stenosed artery.

Library layout:

* :mod:`stenoflow.artery` - wall geometry, hematocrit and viscosity laws
* :mod:`stenoflow.series` - power-series station solver
* :mod:`stenoflow.hemodynamics` - velocity / flow-rate / pressure / shear ratios
* :mod:`stenoflow.fdsolver` - independent finite-difference cross-check
* :mod:`stenoflow.cli` - ``stenoflow`` command-line front end
"""

from .artery import ArteryGeometry, FlowParams, geometry_for
from .errors import (
    ConfigError,
    DegenerateFlow,
    DomainError,
    GeometryInvalid,
    NoConvergence,
    SingularMatrix,
    StenoflowError,
    SweepError,
)
from .fdsolver import (
    FdSolution,
    fd_flow_and_shear,
    self_convergence_order,
    series_fd_gap,
    solve_fd,
)
from .hemodynamics import (
    AxialRecord,
    RadialProfile,
    StationFlow,
    axial_sweep,
    flow_rate,
    pressure_gradient_ratio,
    solve_station,
    station_at,
    velocity_profile,
    wall_shear_ratio,
)
from .series import (
    SeriesSolution,
    compute_coefficients,
    eval_velocity_derivative,
    eval_velocity_shape,
    residual_check,
    shape_flux_integral,
)

__version__ = "0.1.0"

__all__ = [
    "ArteryGeometry",
    "AxialRecord",
    "ConfigError",
    "DegenerateFlow",
    "DomainError",
    "FdSolution",
    "FlowParams",
    "GeometryInvalid",
    "NoConvergence",
    "RadialProfile",
    "SeriesSolution",
    "SingularMatrix",
    "StationFlow",
    "StenoflowError",
    "SweepError",
    "axial_sweep",
    "compute_coefficients",
    "eval_velocity_derivative",
    "eval_velocity_shape",
    "fd_flow_and_shear",
    "flow_rate",
    "geometry_for",
    "pressure_gradient_ratio",
    "residual_check",
    "self_convergence_order",
    "series_fd_gap",
    "shape_flux_integral",
    "solve_fd",
    "solve_station",
    "station_at",
    "velocity_profile",
    "wall_shear_ratio",
]
