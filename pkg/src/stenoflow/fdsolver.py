"""Independent finite-difference solver used to cross-check the series.

Discretizes the same station equation the series solves,

    (1/xi) d/dxi [ xi nu(xi) d(u_hat)/dxi ] - M^2 u_hat - (nu/k) u_hat = 4*a1,

on a uniform grid over [0, eta] with second-order central differences,
d(u_hat)/dxi = 0 on the axis and u_hat = 0 at the wall.  At xi = 0 the
singular term is replaced by its limit 2*nu(0)*u_hat'' (valid because
nu'(0) = 0 for m >= 2), which keeps the matrix tridiagonal and the scheme
second order.  This path never feeds the production observables; it exists
purely for validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson
from scipy.linalg import solve_banded

from .artery import FlowParams
from .errors import SingularMatrix
from .series import compute_coefficients, eval_velocity_shape


@dataclass(frozen=True, eq=False)
class FdSolution:
    """Discrete velocity shape on a uniform radial grid."""

    xi_grid: np.ndarray
    u_hat: np.ndarray
    n: int
    eta: float


def solve_fd(params: FlowParams, eta: float, n: int) -> FdSolution:
    """Direct tridiagonal solve of the station equation on an n-point grid.

    ``n`` must be odd (so Simpson quadrature applies to the same grid) and
    at least 33.
    """
    if n < 33 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 33, got {n}")
    if eta <= 0.0:
        raise ValueError(f"eta must be positive, got {eta}")

    a1 = params.axis_viscosity
    a2 = params.viscosity_drop
    m = params.m
    msq = params.hartmann**2
    inv_k = 1.0 / params.permeability

    h = eta / (n - 1)
    xi = np.linspace(0.0, eta, n)
    nu = a1 - a2 * xi**m
    dnu = -m * a2 * xi ** (m - 1)

    diag = np.empty(n)
    sup = np.zeros(n - 1)
    sub = np.zeros(n - 1)
    rhs = np.full(n, 4.0 * a1)

    # axis row: 2*nu0*u'' with the symmetry condition folded in
    diag[0] = -4.0 * nu[0] / h**2 - (msq + nu[0] * inv_k)
    sup[0] = 4.0 * nu[0] / h**2

    interior = slice(1, n - 1)
    conv = nu[interior] / xi[interior] + dnu[interior]
    diag[interior] = -2.0 * nu[interior] / h**2 - (msq + nu[interior] * inv_k)
    sub[: n - 2] = nu[interior] / h**2 - conv / (2.0 * h)
    sup[1:] = nu[interior] / h**2 + conv / (2.0 * h)

    # no-slip wall row
    diag[-1] = 1.0
    sub[-1] = 0.0
    rhs[-1] = 0.0

    ab = np.zeros((3, n))
    ab[0, 1:] = sup
    ab[1, :] = diag
    ab[2, :-1] = sub
    try:
        u_hat = solve_banded((1, 1), ab, rhs)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - operator is definite
        raise SingularMatrix(f"tridiagonal solve failed at eta={eta:g}: {exc}") from exc
    if not np.all(np.isfinite(u_hat)):
        raise SingularMatrix(f"tridiagonal solve produced non-finite values at eta={eta:g}")
    return FdSolution(xi_grid=xi, u_hat=u_hat, n=n, eta=eta)


def fd_flow_and_shear(sol: FdSolution):
    """Quadrature flux moment and one-sided wall slope of a discrete solution.

    Returns ``(2 * int xi*u_hat dxi, d(u_hat)/dxi at the wall)``; both are
    meant to be compared against their series-based closed forms.
    """
    integral = 2.0 * float(simpson(sol.xi_grid * sol.u_hat, x=sol.xi_grid))
    h = sol.xi_grid[1] - sol.xi_grid[0]
    wall_slope = (3.0 * sol.u_hat[-1] - 4.0 * sol.u_hat[-2] + sol.u_hat[-3]) / (2.0 * h)
    return integral, float(wall_slope)


def series_fd_gap(params: FlowParams, eta: float, n: int = 801) -> float:
    """Relative L-infinity gap between the series and FD velocity shapes."""
    series = compute_coefficients(params, eta)
    fd = solve_fd(params, eta, n)
    reference = eval_velocity_shape(series, fd.xi_grid)
    return float(np.abs(reference - fd.u_hat).max() / np.abs(reference).max())


def self_convergence_order(params: FlowParams, eta: float, n: int = 201) -> float:
    """Observed order from solutions at n, 2n-1 and 4n-3 points.

    Coarse-grid points coincide with every other fine-grid point, so the
    differences can be taken exactly; a second-order scheme returns ~2.
    """
    u1 = solve_fd(params, eta, n).u_hat
    u2 = solve_fd(params, eta, 2 * n - 1).u_hat
    u3 = solve_fd(params, eta, 4 * n - 3).u_hat
    d12 = np.abs(u2[::2] - u1).max()
    d23 = np.abs(u3[::2] - u2).max()
    return math.log2(d12 / d23)
