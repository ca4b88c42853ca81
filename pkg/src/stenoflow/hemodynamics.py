"""Flow observables: velocity, flow rate, pressure gradient, wall shear.

All outputs are ratios against the straight, field-free artery:

* velocity is scaled by the mean velocity there, u0 = -R0^2 (dp/dz)_0 / (8 mu0),
* flow rate by Q0 = -pi R0^4 (dp/dz)_0 / (8 mu0),
* wall shear by tau_N = -(R0/2) (dp/dz)_0,

so no dimensional constant ever needs a numeric value.  The local pressure
gradient ratio follows from holding the dimensionless flow rate at 1 along
the vessel (steady flow, impermeable wall):

    dpdz_bar = (dp/dz)/(dp/dz)_0 = a1 / (4 J(eta)),

where J is the series flux moment (`shape_flux_integral`).  The velocity and
wall shear ratios then read

    u_bar(xi) = -(2/a1) * dpdz_bar * u_hat(xi)
    tau_bar   = dpdz_bar * nu(eta) * u_hat'(eta) / (2 a1)

with u_hat the pressure-scaled shape from `series`.  In the Poiseuille limit
(zero hematocrit and magnetic field, huge permeability) these collapse to
dpdz_bar = eta^-4, centerline u_bar = 2/eta^2 and tau_bar = eta^-3.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .artery import FlowParams, geometry_for
from .errors import DegenerateFlow, SweepError
from .series import (
    SeriesSolution,
    compute_coefficients,
    eval_velocity_derivative,
    eval_velocity_shape,
    shape_flux_integral,
)


@dataclass(frozen=True, eq=False)
class RadialProfile:
    """Sampled non-dimensional velocity across the lumen at one station."""

    z: float
    xi: np.ndarray
    u_bar: np.ndarray
    eta: float
    params: FlowParams


@dataclass(frozen=True)
class AxialRecord:
    """Per-station observables collected by an axial sweep."""

    z: float
    eta: float
    dpdz_bar: float
    tau_bar: float
    u_center: float


@dataclass(frozen=True, eq=False)
class StationFlow:
    """Flux-closed solution at a fixed wall radius.

    Wraps the series solution together with the pressure gradient ratio that
    keeps the dimensionless flow rate at 1.  Exposed directly so observables
    can be computed at any wall radius, not only ones realized by a given
    geometry.
    """

    params: FlowParams
    eta: float
    series: SeriesSolution
    dpdz_bar: float
    flux_moment: float

    def velocity(self, xi):
        """Non-dimensional velocity u_bar at radius xi (scalar or array)."""
        a1 = self.params.axis_viscosity
        return -(2.0 / a1) * self.dpdz_bar * eval_velocity_shape(self.series, xi)

    @property
    def u_center(self) -> float:
        """Centerline velocity ratio u_bar(0)."""
        return float(self.velocity(0.0))

    @property
    def tau_bar(self) -> float:
        """Wall shear stress ratio; positive for forward flow."""
        a1 = self.params.axis_viscosity
        nu_wall = float(self.params.viscosity_factor(self.eta))
        slope = eval_velocity_derivative(self.series, self.eta)
        return self.dpdz_bar * nu_wall * slope / (2.0 * a1)

    def flux(self, dpdz_bar: float) -> float:
        """Dimensionless flow rate produced by a given pressure gradient ratio."""
        return 4.0 * dpdz_bar * self.flux_moment / self.params.axis_viscosity


@lru_cache(maxsize=4096)
def solve_station(params: FlowParams, eta: float) -> StationFlow:
    """Series solution plus flux closure at wall radius ``eta``."""
    series = compute_coefficients(params, eta)
    moment = shape_flux_integral(series)
    if moment <= 0.0:
        raise DegenerateFlow(
            f"flux moment {moment:g} is non-positive at eta={eta:g}"
        )
    dpdz_bar = params.axis_viscosity / (4.0 * moment)
    return StationFlow(
        params=params, eta=eta, series=series, dpdz_bar=dpdz_bar, flux_moment=moment
    )


def station_at(params: FlowParams, z: float) -> StationFlow:
    """Flux-closed solution at axial position ``z`` of the artery."""
    eta = float(geometry_for(params).radius_ratio(z))
    return solve_station(params, eta)


def pressure_gradient_ratio(params: FlowParams, z: float) -> float:
    """Pressure gradient ratio (dp/dz)/(dp/dz)_0 under constant flow rate."""
    return station_at(params, z).dpdz_bar


def velocity_profile(params: FlowParams, z: float, n_samples: int = 101) -> RadialProfile:
    """Velocity ratio sampled on a uniform radial grid [0, eta]."""
    if n_samples < 2:
        raise ValueError(f"n_samples must be at least 2, got {n_samples}")
    st = station_at(params, z)
    xi = np.linspace(0.0, st.eta, n_samples)
    return RadialProfile(z=z, xi=xi, u_bar=st.velocity(xi), eta=st.eta, params=params)


def flow_rate(params: FlowParams, z: float, dpdz_bar: float) -> float:
    """Dimensionless flow rate for an externally supplied gradient ratio."""
    return station_at(params, z).flux(dpdz_bar)


def wall_shear_ratio(params: FlowParams, z: float) -> float:
    """Wall shear stress ratio tau_bar at axial position ``z``."""
    return station_at(params, z).tau_bar


def _record(params: FlowParams, z: float) -> AxialRecord:
    st = station_at(params, z)
    return AxialRecord(
        z=float(z), eta=st.eta, dpdz_bar=st.dpdz_bar, tau_bar=st.tau_bar,
        u_center=st.u_center,
    )


def axial_sweep(params: FlowParams, z_grid, workers: int | None = None):
    """Observables at every station of ``z_grid``, in grid order.

    Stations are independent, so they may be solved concurrently; results are
    assembled by index and identical for any worker count.  Failures are
    collected and raised together as :class:`SweepError` with their station
    indices.
    """
    z_grid = np.asarray(z_grid, dtype=float)
    results: list[AxialRecord | None] = [None] * z_grid.size
    failures = []

    def solve_one(idx: int):
        try:
            results[idx] = _record(params, z_grid[idx])
        except Exception as exc:  # noqa: BLE001 - aggregated and re-raised
            failures.append((idx, float(z_grid[idx]), exc))

    if workers is None or workers <= 1:
        for idx in range(z_grid.size):
            solve_one(idx)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(solve_one, range(z_grid.size)))

    if failures:
        raise SweepError(sorted(failures, key=lambda f: f[0]))
    return results
