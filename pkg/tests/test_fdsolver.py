"""Finite-difference cross-check: exactness, convergence order, agreement."""

import numpy as np
import pytest

from stenoflow import (
    FlowParams,
    compute_coefficients,
    eval_velocity_derivative,
    fd_flow_and_shear,
    self_convergence_order,
    series_fd_gap,
    shape_flux_integral,
    solve_fd,
    solve_station,
)

DEFAULTS = FlowParams()
POISEUILLE = FlowParams(hematocrit=0.0, hartmann=0.0, permeability=1e9, alpha=0.0)


class TestSolveFd:
    def test_poiseuille_matches_closed_form(self):
        fd = solve_fd(POISEUILLE, 1.0, 201)
        assert np.abs(fd.u_hat - (fd.xi_grid**2 - 1.0)).max() < 5e-5

    def test_wall_value_is_exactly_zero(self):
        fd = solve_fd(DEFAULTS, 0.625, 201)
        assert fd.u_hat[-1] == 0.0

    def test_shape_is_non_positive(self):
        # the discrete solution keeps one sign, like the continuous one
        for params, eta in [(DEFAULTS, 0.375), (DEFAULTS, 1.0), (FlowParams(hartmann=5.0), 1.0)]:
            fd = solve_fd(params, eta, 201)
            assert fd.u_hat.max() <= 0.0

    def test_grid_validation(self):
        with pytest.raises(ValueError, match="odd"):
            solve_fd(DEFAULTS, 1.0, 200)
        with pytest.raises(ValueError, match="odd"):
            solve_fd(DEFAULTS, 1.0, 31)
        with pytest.raises(ValueError, match="eta"):
            solve_fd(DEFAULTS, -1.0, 201)

    def test_richardson_error_ratio_near_four(self):
        sol = compute_coefficients(DEFAULTS, 0.625)

        def err(n):
            fd = solve_fd(DEFAULTS, 0.625, n)
            from stenoflow import eval_velocity_shape

            return np.abs(fd.u_hat - eval_velocity_shape(sol, fd.xi_grid)).max()

        ratio = err(201) / err(401)
        assert ratio == pytest.approx(4.0, abs=0.5)

    @pytest.mark.parametrize(
        "params,eta",
        [
            (DEFAULTS, 0.625),
            (DEFAULTS, 1.0),
            (FlowParams(hartmann=5.0, permeability=0.1, m=4), 1.0),
        ],
    )
    def test_self_convergence_is_second_order(self, params, eta):
        assert self_convergence_order(params, eta) == pytest.approx(2.0, abs=0.3)

    def test_series_agreement_at_defaults(self):
        assert series_fd_gap(DEFAULTS, 0.625, 801) < 1e-4


class TestFlowAndShear:
    def test_poiseuille_integral_and_wall_slope(self):
        fd = solve_fd(POISEUILLE, 1.0, 201)
        integral, slope = fd_flow_and_shear(fd)
        assert integral == pytest.approx(-0.5, abs=1e-4)
        assert slope == pytest.approx(2.0, abs=1e-4)

    def test_matches_series_closed_forms_at_defaults(self):
        st = solve_station(DEFAULTS, 0.625)
        fd = solve_fd(DEFAULTS, 0.625, 801)
        integral, slope = fd_flow_and_shear(fd)
        # flux moment: the closed form is -integral/2
        assert -integral / 2.0 == pytest.approx(shape_flux_integral(st.series), rel=1e-4)
        # flow rate rebuilt from the quadrature equals the closed one
        q_fd = 4.0 * st.dpdz_bar * (-integral / 2.0) / DEFAULTS.axis_viscosity
        assert q_fd == pytest.approx(1.0, rel=1e-4)
        assert slope == pytest.approx(
            eval_velocity_derivative(st.series, 0.625), rel=1e-4
        )

    def test_quadrature_error_shrinks_fourth_order(self):
        # Simpson + second-order fields: halving h cuts the flux error ~4x
        reference = shape_flux_integral(compute_coefficients(DEFAULTS, 0.625))

        def err(n):
            integral, _ = fd_flow_and_shear(solve_fd(DEFAULTS, 0.625, n))
            return abs(-integral / 2.0 - reference)

        assert err(201) / err(401) == pytest.approx(4.0, abs=1.0)
