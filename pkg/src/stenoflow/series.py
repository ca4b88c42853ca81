"""Power-series solution of the reduced momentum equation at one axial station.

The steady axial velocity obeys, in the scaled radial coordinate xi = r/R0
with nu(xi) = a1 - a2*xi**m (a1 = 1 + beta*H, a2 = beta*H),

    (1/xi) d/dxi [ xi nu(xi) du/dxi ] - M^2 u - (nu(xi)/k) u = RHS,

regular at xi = 0 and with no slip at the wall xi = eta.  The solution
bounded at the origin is built from two power series,

    u = K * sum_i A_i xi^i  +  G * sum_i B_i xi^(i+2),      A_0 = B_0 = 1,

where G = R0^2 (dp/dz) / (4 a1 mu0) is the natural forcing scale and K is
fixed by the wall condition.  Substituting the ansatz and matching powers
gives, for j >= 1 (coefficients with negative index are zero),

    A_j = [ a2 j (j-m) A_{j-m} + (M^2 + a1/k) A_{j-2} - (a2/k) A_{j-m-2} ]
          / (a1 j^2)
    B_j = [ a2 (j+2)(j+2-m) B_{j-m} + (M^2 + a1/k) B_{j-2} - (a2/k) B_{j-m-2} ]
          / (a1 (j+2)^2)

so the homogeneous series solves the unforced equation and the particular
series solves it with constant right-hand side 4*a1.  Both series are entire,
so truncation converges fast; `residual_check` verifies the recurrences by
substituting the truncated series back into the differential operator.

Everything here works on the pressure-scaled shape u_hat = u/G, which is
negative inside the lumen and zero at the wall (physical velocity is positive
because dp/dz < 0 drives forward flow).

Convergence: the coefficient ratio |A_j xi^j / A_{j-m} xi^(j-m)| tends to
(a2/a1) xi^m, so both series converge exactly for xi below the radius where
the viscosity profile would vanish, (a1/a2)^(1/m); within it the tail decays
geometrically.  For zero hematocrit (a2 = 0) the series are entire.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from numpy.polynomial import polynomial as npoly

from .artery import FlowParams
from .errors import DomainError, NoConvergence

#: consecutive terms that must pass the tail bound before truncating
_STREAK = 3

#: internal tightening of the tail threshold below the nominal tol; the first
#: dropped terms re-enter the momentum operator amplified by ~a1*n^2, so the
#: raw tol would leave residuals near 1e-8 at tol=1e-12
_TAIL_SAFETY = 64.0


@dataclass(frozen=True, eq=False)
class SeriesSolution:
    """Truncated series pair for one station.

    ``homog`` holds the coefficients A_i of the homogeneous solution,
    ``partic`` the coefficients B_i of the particular one (implicit xi^2
    prefactor).  ``eta`` is the local wall radius R(z)/R0 and ``n_used`` the
    highest retained index.
    """

    homog: np.ndarray
    partic: np.ndarray
    eta: float
    n_used: int

    @cached_property
    def _partic_full(self) -> np.ndarray:
        # particular series as a plain polynomial: B_i xi^(i+2)
        return np.concatenate([[0.0, 0.0], self.partic])

    def sum_homog(self, xi):
        """sum_i A_i xi^i."""
        return npoly.polyval(xi, self.homog)

    def sum_partic(self, xi):
        """sum_i B_i xi^(i+2)."""
        return npoly.polyval(xi, self._partic_full)

    @cached_property
    def no_slip_weight(self) -> float:
        """Weight K/G of the homogeneous series that zeroes u at the wall.

        Equals -sum_i B_i eta^(i+2) / sum_i A_i eta^i, and is also the shape
        value on the axis.
        """
        return -float(self.sum_partic(self.eta) / self.sum_homog(self.eta))


@lru_cache(maxsize=2048)
def compute_coefficients(params: FlowParams, eta: float) -> SeriesSolution:
    """Run both recurrences at wall radius ``eta`` until the tail is negligible.

    Truncates at the first order where |A_j eta^j| and |B_j eta^(j+2)| each
    fall below the tail threshold (``tol`` tightened by a fixed safety
    factor) times the running sum magnitude for three consecutive terms;
    raises :class:`NoConvergence` if ``n_max`` is reached first.
    """
    if eta <= 0.0:
        raise ValueError(f"eta must be positive, got {eta}")
    a1 = params.axis_viscosity
    a2 = params.viscosity_drop
    m = params.m
    drive = params.hartmann**2 + a1 / params.permeability
    sink = a2 / params.permeability
    tol = params.tol / _TAIL_SAFETY

    a = [1.0]
    b = [1.0]
    sum_a = 1.0
    sum_b = eta**2
    streak = 0
    n_used = params.n_max
    for j in range(1, params.n_max + 1):
        a_jm = a[j - m] if j - m >= 0 else 0.0
        a_j2 = a[j - 2] if j - 2 >= 0 else 0.0
        a_jm2 = a[j - m - 2] if j - m - 2 >= 0 else 0.0
        b_jm = b[j - m] if j - m >= 0 else 0.0
        b_j2 = b[j - 2] if j - 2 >= 0 else 0.0
        b_jm2 = b[j - m - 2] if j - m - 2 >= 0 else 0.0

        a_j = (a2 * j * (j - m) * a_jm + drive * a_j2 - sink * a_jm2) / (a1 * j * j)
        b_j = (a2 * (j + 2) * (j + 2 - m) * b_jm + drive * b_j2 - sink * b_jm2) / (
            a1 * (j + 2) * (j + 2)
        )
        a.append(a_j)
        b.append(b_j)

        term_a = a_j * eta**j
        term_b = b_j * eta ** (j + 2)
        sum_a += term_a
        sum_b += term_b
        if abs(term_a) < tol * max(1.0, abs(sum_a)) and abs(term_b) < tol * max(
            1.0, abs(sum_b)
        ):
            streak += 1
            if streak == _STREAK:
                n_used = j
                break
        else:
            streak = 0
    else:
        raise NoConvergence(
            f"series tail above tol={params.tol:g} after n_max={params.n_max} "
            f"terms at eta={eta:g}; the wall radius may be too close to the "
            f"viscosity-vanishing radius {(a1 / a2) ** (1.0 / m) if a2 else float('inf'):g}"
        )

    homog = np.array(a[: n_used + 1])
    partic = np.array(b[: n_used + 1])
    homog.setflags(write=False)
    partic.setflags(write=False)
    return SeriesSolution(homog=homog, partic=partic, eta=eta, n_used=n_used)


def _check_radius(sol: SeriesSolution, xi) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    if xi.size and (xi.min() < 0.0 or xi.max() > sol.eta * (1.0 + 1e-12)):
        raise DomainError(
            f"xi must lie in [0, eta={sol.eta:g}], got range "
            f"[{xi.min():g}, {xi.max():g}]"
        )
    return xi


def eval_velocity_shape(sol: SeriesSolution, xi):
    """Pressure-scaled velocity shape u_hat(xi); zero at the wall.

    u_hat = K/G * sum A_i xi^i + sum B_i xi^(i+2).  Negative inside the
    lumen; the physical velocity is G * u_hat with G < 0 for forward flow.
    """
    xi = _check_radius(sol, xi)
    out = sol.no_slip_weight * sol.sum_homog(xi) + sol.sum_partic(xi)
    return out if out.ndim else float(out)


def eval_velocity_derivative(sol: SeriesSolution, xi):
    """Term-by-term derivative d(u_hat)/dxi; exactly zero on the axis."""
    xi = _check_radius(sol, xi)
    d_h = npoly.polyval(xi, npoly.polyder(sol.homog))
    d_p = npoly.polyval(xi, npoly.polyder(sol._partic_full))
    out = sol.no_slip_weight * d_h + d_p
    return out if out.ndim else float(out)


def shape_flux_integral(sol: SeriesSolution) -> float:
    """Minus the radial flux moment of the shape: -int_0^eta xi*u_hat dxi.

    Evaluates to [S_B(eta) * T_A - T_B * S_A(eta)] / S_A(eta) with
    T_A = sum A_i eta^(i+2)/(i+2) and T_B = sum B_i eta^(i+4)/(i+4).
    Positive for any physical station.
    """
    eta = sol.eta
    i_h = np.arange(sol.homog.size)
    i_p = np.arange(sol.partic.size)
    t_a = eta**2 * npoly.polyval(eta, sol.homog / (i_h + 2.0))
    t_b = eta**4 * npoly.polyval(eta, sol.partic / (i_p + 4.0))
    return -(sol.no_slip_weight * t_a + t_b)


def residual_check(sol: SeriesSolution, params: FlowParams, xi_grid, scaled=False):
    """Substitute the truncated series into the momentum operator.

    Evaluates L[w] for the homogeneous series (target 0) and L[v] - 4*a1 for
    the particular one, using the series' analytic derivatives, and returns
    the worst absolute residual over the grid.  With ``scaled=True`` each
    part is divided by max(1, sup|part|) first.  The grid must lie strictly
    inside (0, eta) because of the 1/xi term.
    """
    xi = np.asarray(xi_grid, dtype=float)
    if xi.min() <= 0.0 or xi.max() >= sol.eta:
        raise ValueError("residual grid must lie strictly inside (0, eta)")
    a1 = params.axis_viscosity
    a2 = params.viscosity_drop
    m = params.m
    nu = a1 - a2 * xi**m
    dnu = -m * a2 * xi ** (m - 1)
    absorb = params.hartmann**2 + nu / params.permeability

    worst = 0.0
    for coeffs, forcing in ((sol.homog, 0.0), (sol._partic_full, 4.0 * a1)):
        w = npoly.polyval(xi, coeffs)
        w1 = npoly.polyval(xi, npoly.polyder(coeffs))
        w2 = npoly.polyval(xi, npoly.polyder(coeffs, 2))
        res = np.abs(nu * (w2 + w1 / xi) + dnu * w1 - absorb * w - forcing).max()
        if scaled:
            res /= max(1.0, np.abs(w).max())
        worst = max(worst, float(res))
    return worst
