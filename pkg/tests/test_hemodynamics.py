"""Flow observables: closures, limits, monotone trends, sweeps."""

import numpy as np
import pytest

from stenoflow import (
    ArteryGeometry,
    FlowParams,
    NoConvergence,
    SweepError,
    axial_sweep,
    flow_rate,
    pressure_gradient_ratio,
    solve_station,
    station_at,
    velocity_profile,
    wall_shear_ratio,
)

DEFAULTS = FlowParams()
POISEUILLE = FlowParams(hematocrit=0.0, hartmann=0.0, permeability=1e9, alpha=0.0)

# frozen from the first verified run (series cross-checked against the
# finite-difference solver); defaults with m = 2
GOLDEN_U_CENTER = {1.0: 11.527345245291396, 2.0: 3.2623484735970716, 3.0: 8.374326280702475}
GOLDEN_DPDZ = {1.0: 63.67245044079593, 3.0: 36.37883587581673}
GOLDEN_TAU = {1.0: 22.321301445132104}


class TestPoiseuilleReductions:
    @pytest.mark.parametrize("eta", [0.375, 0.625, 1.0, 1.2])
    def test_closed_forms(self, eta):
        st = solve_station(POISEUILLE, eta)
        assert st.dpdz_bar == pytest.approx(eta**-4, rel=1e-8)
        assert st.tau_bar == pytest.approx(eta**-3, rel=1e-8)
        assert st.u_center == pytest.approx(2.0 / eta**2, rel=1e-8)

    def test_straight_artery_is_the_reference_state(self):
        assert pressure_gradient_ratio(POISEUILLE, 0.1) == pytest.approx(1.0, rel=1e-8)
        assert wall_shear_ratio(POISEUILLE, 0.1) == pytest.approx(1.0, rel=1e-8)

    def test_parabolic_profile(self):
        profile = velocity_profile(POISEUILLE, 0.1, 41)
        assert profile.u_bar == pytest.approx(2.0 * (1.0 - profile.xi**2), abs=1e-8)

    def test_flow_rate_values(self):
        assert flow_rate(POISEUILLE, 0.1, 1.0) == pytest.approx(1.0, rel=1e-8)


class TestFluxClosure:
    def test_unit_flow_rate_along_the_vessel(self):
        for z in np.linspace(0.0, 5.0, 51):
            st = station_at(DEFAULTS, float(z))
            assert st.flux(st.dpdz_bar) == pytest.approx(1.0, abs=1e-10)

    def test_flow_rate_is_linear_in_the_gradient(self):
        dpdz = pressure_gradient_ratio(DEFAULTS, 2.0)
        assert flow_rate(DEFAULTS, 2.0, 2.0 * dpdz) == pytest.approx(2.0, abs=1e-10)

    def test_velocity_is_linear_in_the_gradient(self):
        from stenoflow import eval_velocity_shape

        st = station_at(DEFAULTS, 2.0)
        xi = np.linspace(0.0, st.eta, 11)
        shape = eval_velocity_shape(st.series, xi)
        rebuilt = -(2.0 / DEFAULTS.axis_viscosity) * st.dpdz_bar * shape
        assert rebuilt == pytest.approx(st.velocity(xi), rel=1e-14)
        # the same shape driven twice as hard moves twice as fast
        doubled = -(2.0 / DEFAULTS.axis_viscosity) * (2.0 * st.dpdz_bar) * shape
        assert doubled == pytest.approx(2.0 * st.velocity(xi), rel=1e-14)


class TestProfiles:
    def test_wall_value_is_zero(self):
        profile = velocity_profile(DEFAULTS, 2.0)
        assert abs(profile.u_bar[-1]) < 1e-10 * profile.u_bar.max()

    def test_profile_non_negative(self):
        for z in (1.0, 2.0, 3.4):
            profile = velocity_profile(DEFAULTS, z, 201)
            assert profile.u_bar.min() > -1e-12

    def test_monotone_from_axis_to_wall_without_field(self):
        profile = velocity_profile(FlowParams(hartmann=0.0), 2.0, 401)
        assert np.all(np.diff(profile.u_bar) <= 1e-12)

    def test_sample_count_validated(self):
        with pytest.raises(ValueError):
            velocity_profile(DEFAULTS, 2.0, 1)

    def test_golden_centerline_values(self):
        for z, expected in GOLDEN_U_CENTER.items():
            assert station_at(DEFAULTS, z).u_center == pytest.approx(expected, rel=1e-9)

    def test_throat_velocity_drops(self):
        # secondary throat runs ~27% below the primary, overlap ~61% below
        # the secondary (within the soft 15-point bands of the claims)
        u1 = station_at(DEFAULTS, 1.0).u_center
        u2 = station_at(DEFAULTS, 2.0).u_center
        u3 = station_at(DEFAULTS, 3.0).u_center
        assert 0.15 <= 1.0 - u3 / u1 <= 0.45
        assert 0.40 <= 1.0 - u2 / u3 <= 0.70

    def test_near_wall_crossover_under_magnetic_field(self):
        lo = velocity_profile(FlowParams(hartmann=0.0), 2.0, 401)
        hi = velocity_profile(FlowParams(hartmann=5.0), 2.0, 401)
        diff = lo.u_bar - hi.u_bar
        assert diff[0] > 0.0  # field slows the core
        assert diff[-2] < 0.0  # and speeds up the near-wall ring
        crossings = np.where(np.diff(np.sign(diff[:-1])) != 0)[0]
        assert len(crossings) >= 1
        xi_star = lo.xi[crossings[0]]
        assert 0.0 < xi_star < lo.eta


class TestPressureGradient:
    def test_golden_values(self):
        for z, expected in GOLDEN_DPDZ.items():
            assert pressure_gradient_ratio(DEFAULTS, z) == pytest.approx(expected, rel=1e-9)

    def test_positive_everywhere(self):
        for z in np.linspace(0.0, 5.0, 21):
            assert pressure_gradient_ratio(DEFAULTS, float(z)) > 0.0

    def test_primary_throat_dominates_at_standard_taper(self):
        assert pressure_gradient_ratio(DEFAULTS, 1.0) > pressure_gradient_ratio(DEFAULTS, 3.0)


class TestWallShear:
    def test_golden_value(self):
        assert wall_shear_ratio(DEFAULTS, 1.0) == pytest.approx(GOLDEN_TAU[1.0], rel=1e-9)

    def test_throats_match_without_taper(self):
        p = FlowParams(alpha=0.0)
        assert abs(wall_shear_ratio(p, 1.0) - wall_shear_ratio(p, 3.0)) <= 1e-8

    def test_poiseuille_scaling(self):
        for eta in (0.375, 0.625, 1.0, 1.2):
            assert solve_station(POISEUILLE, eta).tau_bar == pytest.approx(
                eta**-3, rel=1e-8
            )


class TestTrends:
    def test_pressure_gradient_monotonicity(self):
        dp = [pressure_gradient_ratio(FlowParams(hartmann=M), 2.0) for M in (0.0, 2.5, 5.0)]
        assert dp[0] < dp[1] < dp[2]
        dp = [pressure_gradient_ratio(FlowParams(hematocrit=H), 2.0) for H in (0.2, 0.4, 0.6)]
        assert dp[0] < dp[1] < dp[2]
        dp = [pressure_gradient_ratio(FlowParams(permeability=k), 2.0) for k in (0.1, 0.25, 1.0)]
        assert dp[0] > dp[1] > dp[2]

    def test_centerline_velocity_monotonicity(self):
        uc = [station_at(FlowParams(hartmann=M), 2.0).u_center for M in (0.0, 2.5, 5.0)]
        assert uc[0] > uc[1] > uc[2]
        uc = [station_at(FlowParams(hematocrit=H), 2.0).u_center for H in (0.2, 0.4, 0.6)]
        assert uc[0] > uc[1] > uc[2]
        uc = [station_at(FlowParams(permeability=k), 2.0).u_center for k in (0.1, 0.25, 1.0)]
        assert uc[0] < uc[1] < uc[2]

    def test_wall_shear_rises_with_hematocrit_at_the_throat(self):
        tau = [wall_shear_ratio(FlowParams(hematocrit=H), 1.0) for H in (0.2, 0.4, 0.6)]
        assert tau[0] < tau[1] < tau[2]

    def test_wall_shear_falls_with_taper_past_the_overlap(self):
        tau = [wall_shear_ratio(FlowParams(alpha=a), 3.0) for a in (0.0, 0.05, 0.09)]
        assert tau[0] > tau[1] > tau[2]


class TestAxialSweep:
    def test_landmark_radii_compose_taper_and_narrowing(self):
        geom = ArteryGeometry(DEFAULTS)
        stations = [z for _, z in geom.landmarks()]
        records = axial_sweep(DEFAULTS, stations)
        depth = (1.0, 0.375, 0.625, 0.375, 1.0)
        for rec, z, frac in zip(records, stations, depth):
            assert rec.eta == pytest.approx(float(geom.taper_factor(z)) * frac, rel=1e-12)

    def test_symmetric_records_without_taper(self):
        p = FlowParams(alpha=0.0)
        offsets = np.linspace(0.0, 1.5, 16)
        left = axial_sweep(p, 2.0 - offsets)
        right = axial_sweep(p, 2.0 + offsets)
        for a, b in zip(left, right):
            assert a.dpdz_bar == pytest.approx(b.dpdz_bar, rel=1e-8)
            assert a.tau_bar == pytest.approx(b.tau_bar, rel=1e-8)
            assert a.u_center == pytest.approx(b.u_center, rel=1e-8)

    def test_records_positive(self):
        for rec in axial_sweep(DEFAULTS, np.linspace(0.0, 3.5, 29)):
            assert rec.dpdz_bar > 0.0 and rec.tau_bar > 0.0 and rec.u_center > 0.0

    def test_worker_count_does_not_change_results(self):
        grid = np.linspace(0.0, 5.0, 101)
        serial = axial_sweep(DEFAULTS, grid, workers=1)
        threaded = axial_sweep(DEFAULTS, grid, workers=8)
        assert serial == threaded

    def test_pointwise_parameter_orderings(self):
        # grid stops short of the tapered outlet so H = 0.4 still converges
        grid = np.linspace(0.0, 3.4, 35)
        thin = axial_sweep(FlowParams(hematocrit=0.2), grid)
        rich = axial_sweep(FlowParams(hematocrit=0.4), grid)
        assert all(r.dpdz_bar > t.dpdz_bar for r, t in zip(rich, thin))
        tight = axial_sweep(FlowParams(permeability=0.1), grid)
        open_ = axial_sweep(FlowParams(permeability=1.0), grid)
        assert all(o.dpdz_bar < t.dpdz_bar for o, t in zip(open_, tight))

    def test_failures_aggregate_with_station_indices(self):
        # H = 0.4 diverges near the tapered outlet (eta > sqrt(2))
        p = FlowParams(hematocrit=0.4)
        grid = [1.0, 2.0, 4.9, 5.0]
        with pytest.raises(SweepError) as excinfo:
            axial_sweep(p, grid)
        failed = [(i, z) for i, z, _ in excinfo.value.failures]
        assert failed == [(2, 4.9), (3, 5.0)]
        assert all(isinstance(e, NoConvergence) for _, _, e in excinfo.value.failures)
