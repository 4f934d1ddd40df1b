import math

import numpy as np
import pytest

from broadband_capacity import (
    ChannelSpec,
    PhysicalInputs,
    Quantity,
    analytic_K,
    analytic_f_loss,
    analytic_f_white,
    analytic_y0_lowT,
    capacity_factor,
    capacity_report,
    f_integral,
    omega_from_f,
    omega_scale,
    q_alt_bound,
    rate_rc,
    solve_y0,
)
from broadband_capacity.channels import HBAR


class TestFIntegral:
    @pytest.mark.parametrize("eta", [0.25, 0.5, 1.0])
    def test_loss(self, eta):
        assert f_integral(Quantity.C_LOWER, ChannelSpec.loss(eta)) == pytest.approx(
            analytic_f_loss(eta), abs=1e-6
        )

    @pytest.mark.parametrize("eta,nbar", [(0.5, 1.0), (0.8, 0.2), (0.3, 5.0)])
    def test_white(self, eta, nbar):
        spec = ChannelSpec.white(eta, nbar)
        assert f_integral(Quantity.C_LOWER, spec) == pytest.approx(
            analytic_f_white(spec), abs=1e-6
        )

    def test_thermal_low_temperature(self):
        spec = ChannelSpec.thermal(0.6, 0.5)
        y0 = analytic_y0_lowT(spec)
        # term-by-term integration of the two Bose profiles
        expect = (math.pi**2 / 6.0) * (spec.eta - (1.0 - spec.eta) * y0**2 / spec.eta)
        assert f_integral(Quantity.C_LOWER, spec, y0) == pytest.approx(expect, abs=1e-6)


class TestY0:
    def test_non_thermal_is_zero(self):
        assert solve_y0(Quantity.C_LOWER, ChannelSpec.loss(0.5)) == 0.0
        assert solve_y0(Quantity.CE, ChannelSpec.white(0.5, 1.0)) == 0.0
        assert solve_y0(Quantity.C_LOWER, ChannelSpec.thermal(0.5, 0.0)) == 0.0

    def test_low_temperature_closed_form(self):
        spec = ChannelSpec.thermal(0.5, 0.5)
        assert analytic_y0_lowT(spec) == pytest.approx(0.3162277660, abs=1e-9)
        assert solve_y0(Quantity.C_LOWER, spec) == pytest.approx(0.3162277660, abs=1e-6)

    def test_approaches_eta_at_unit_ratio(self):
        spec = ChannelSpec.thermal(0.5, 1.0 - 1e-9)
        assert solve_y0(Quantity.C_LOWER, spec) == pytest.approx(0.5, abs=1e-3)

    def test_quantum_rate_degenerate_below_half(self):
        assert solve_y0(Quantity.Q_LOWER, ChannelSpec.thermal(0.4, 0.5)) == 0.0

    def test_dimensionless_constraint_reproduces_closed_form(self):
        # symbolic check: substituting the closed-form low-temperature f
        # into y^2 = (6/pi^2) rho^2 f(y) must give back the closed-form y0
        import sympy as sp

        eta, rho, y = sp.symbols("eta rho y", positive=True)
        f_low = sp.pi**2 / 6 * (eta - (1 - eta) * y**2 / eta)
        roots = sp.solve(sp.Eq(y**2, 6 / sp.pi**2 * rho**2 * f_low), y)
        closed = eta * rho / sp.sqrt(eta + (1 - eta) * rho**2)
        # compare squares (simplify struggles with nested radical signs) and
        # pin the sign on a numeric sample
        sample = {eta: sp.Rational(63, 100), rho: sp.Rational(2, 5)}
        matches = [
            r
            for r in roots
            if sp.simplify(r**2 - closed**2) == 0 and float(r.subs(sample)) > 0
        ]
        assert matches, roots


class TestCapacityFactor:
    @pytest.mark.parametrize("eta", [0.25, 0.64, 1.0])
    def test_loss_classical_is_sqrt_eta(self, eta):
        sol = capacity_factor(Quantity.C_LOWER, ChannelSpec.loss(eta))
        assert sol.factor == pytest.approx(math.sqrt(eta), abs=1e-5)

    def test_loss_assisted_endpoints(self):
        assert capacity_factor(Quantity.CE, ChannelSpec.loss(1.0)).factor == pytest.approx(
            2.0, abs=1e-3
        )
        assert capacity_factor(Quantity.CE, ChannelSpec.loss(0.5)).factor == pytest.approx(
            1.0, abs=1e-3
        )

    def test_loss_quantum_null_at_half(self):
        sol = capacity_factor(Quantity.Q_LOWER, ChannelSpec.loss(0.5))
        assert sol.factor == pytest.approx(0.0, abs=1e-6)
        assert sol.f_value == 0.0

    def test_profile_sampling(self):
        sol = capacity_factor(Quantity.C_LOWER, ChannelSpec.loss(0.5), profile_points=16)
        assert len(sol.profile) == 16
        assert all(b.x > a.x for a, b in zip(sol.profile, sol.profile[1:]))

    def test_assisted_factor_bounded_by_superdense(self):
        for spec in (ChannelSpec.loss(1.0), ChannelSpec.white(0.9, 0.1), ChannelSpec.dephasing(1.0)):
            assert capacity_factor(Quantity.CE, spec).factor <= 2.0 + 1e-9


class TestAnalyticK:
    def test_loss(self):
        assert analytic_K(ChannelSpec.loss(0.81)) == pytest.approx(0.9, abs=1e-12)

    def test_thermal_zero_ratio_is_loss(self):
        for eta in (0.3, 0.7):
            assert analytic_K(ChannelSpec.thermal(eta, 0.0)) == pytest.approx(
                math.sqrt(eta), abs=1e-12
            )

    def test_white_zero_noise_is_loss(self):
        assert analytic_K(ChannelSpec.white(0.49, 0.0)) == pytest.approx(0.7, abs=1e-12)

    def test_branch_continuity(self):
        low = analytic_K(ChannelSpec.thermal(0.7, 1.0))
        high = analytic_K(ChannelSpec.thermal(0.7, 1.0 + 1e-4))
        assert abs(low - high) < 1e-4

    def test_dephasing_has_no_closed_form(self):
        with pytest.raises(ValueError):
            analytic_K(ChannelSpec.dephasing(0.5))


class TestNumericMatchesAnalytic:
    @pytest.mark.parametrize("eta", [round(0.1 * k, 1) for k in range(1, 11)])
    def test_loss_grid(self, eta):
        num = capacity_factor(Quantity.C_LOWER, ChannelSpec.loss(eta)).factor
        assert num == pytest.approx(math.sqrt(eta), abs=1e-5)

    @pytest.mark.parametrize("nbar", [0.1, 1.0, 10.0])
    @pytest.mark.parametrize("eta", [0.2, 0.5, 0.8, 1.0])
    def test_white_grid(self, eta, nbar):
        spec = ChannelSpec.white(eta, nbar)
        num = capacity_factor(Quantity.C_LOWER, spec).factor
        assert num == pytest.approx(analytic_K(spec), abs=1e-5)

    @pytest.mark.parametrize("rho", [0.25, 0.5, 1.0, 2.0])
    @pytest.mark.parametrize("eta", [0.1, 0.5, 0.9])
    def test_thermal_grid(self, eta, rho):
        spec = ChannelSpec.thermal(eta, rho)
        num = capacity_factor(Quantity.C_LOWER, spec).factor
        assert num == pytest.approx(analytic_K(spec), abs=1e-5)


class TestBounds:
    def test_q_alt(self):
        assert q_alt_bound(2.0) == 1.0
        assert q_alt_bound(0.8) == 0.0
        with pytest.raises(ValueError):
            q_alt_bound(-0.1)

    def test_q_alt_close_to_direct_bound_on_loss(self):
        # the two quantum bounds nearly coincide on the lossy channel
        ce = capacity_factor(Quantity.CE, ChannelSpec.loss(0.75)).factor
        q = capacity_factor(Quantity.Q_LOWER, ChannelSpec.loss(0.75)).factor
        alt = q_alt_bound(ce)
        assert alt > 0.0
        assert alt <= q + 0.05

    def test_rate_rc_power_law(self):
        lo = rate_rc(PhysicalInputs(1e-9))
        hi = rate_rc(PhysicalInputs(4e-9))
        assert hi == pytest.approx(2.0 * lo, rel=1e-12)

    def test_omega_scale(self):
        power = 1e-9
        omega = omega_scale(Quantity.C_LOWER, ChannelSpec.loss(1.0), PhysicalInputs(power))
        assert omega == pytest.approx(math.sqrt(12.0 * power / (math.pi * HBAR)), rel=1e-6)
        assert omega_from_f(0.5, power) == pytest.approx(
            math.sqrt(2.0) * omega_from_f(1.0, power), rel=1e-12
        )


class TestReport:
    def test_noiseless_endpoint(self):
        rep = capacity_report(ChannelSpec.loss(1.0), PhysicalInputs(1e-9))
        assert rep.ce_factor == pytest.approx(2.0, abs=1e-3)
        assert rep.qe_factor == pytest.approx(1.0, abs=5e-4)
        assert rep.c_lower_factor == pytest.approx(1.0, abs=1e-3)
        assert rep.c_upper_factor == pytest.approx(1.0, abs=1e-3)
        assert rep.q_lower_factor == pytest.approx(1.0, abs=1e-3)
        scale = rep.inputs.transmission_time * rep.rc_bits_per_sec
        assert rep.rates["c_lower"] == pytest.approx(scale, rel=2e-3)
        assert rep.rates["ce"] == pytest.approx(2.0 * scale, rel=2e-3)

    def test_no_cloning_region(self):
        rep = capacity_report(ChannelSpec.loss(0.4), PhysicalInputs(1e-9))
        assert rep.q_lower_factor == pytest.approx(0.0, abs=1e-9)
        assert rep.q_alt_factor == pytest.approx(0.0, abs=1e-9)

    def test_white_degenerates_to_loss(self):
        loss = capacity_report(ChannelSpec.loss(0.7), PhysicalInputs(1e-9))
        white = capacity_report(ChannelSpec.white(0.7, 1e-6), PhysicalInputs(1e-9))
        for name in ("ce_factor", "c_lower_factor", "q_lower_factor"):
            assert getattr(white, name) == pytest.approx(getattr(loss, name), abs=1e-3)

    def test_identities_and_orderings(self):
        rep = capacity_report(ChannelSpec.white(0.8, 0.5), PhysicalInputs(1e-9))
        assert rep.q_alt_factor == max(rep.ce_factor - 1.0, 0.0)
        assert rep.qe_factor == rep.ce_factor / 2.0
        assert rep.c_lower_factor <= min(rep.ce_factor, 1.0) + 1e-9
        assert max(rep.q_lower_factor, rep.q_alt_factor) <= rep.qe_factor + 1e-9

    def test_thermal_uses_temperature_when_given(self):
        from broadband_capacity import critical_temperature

        power = 1e-9
        t = 0.25 * critical_temperature(power)
        rep = capacity_report(ChannelSpec.thermal(0.7, 0.0), PhysicalInputs(power, t))
        assert rep.rho_t == pytest.approx(0.25, abs=1e-10)

    def test_monotone_in_eta(self):
        factors = [
            capacity_report(ChannelSpec.loss(eta), PhysicalInputs(1e-9)) for eta in (0.3, 0.6, 0.9)
        ]
        for name in ("ce_factor", "c_lower_factor", "q_lower_factor"):
            vals = [getattr(rep, name) for rep in factors]
            assert all(a <= b + 1e-9 for a, b in zip(vals, vals[1:]))

    def test_noise_monotone(self):
        ks = [analytic_K(ChannelSpec.white(0.7, nbar)) for nbar in (0.1, 1.0, 10.0)]
        assert all(a > b for a, b in zip(ks, ks[1:]))
        ks = [analytic_K(ChannelSpec.thermal(0.7, rho)) for rho in (0.25, 0.5, 1.0, 2.0)]
        assert all(a > b for a, b in zip(ks, ks[1:]))
        ces = [
            capacity_factor(Quantity.CE, ChannelSpec.white(0.7, nbar)).factor
            for nbar in (0.1, 1.0, 10.0)
        ]
        assert all(a > b for a, b in zip(ces, ces[1:]))

    def test_quantum_threshold_slightly_above_half(self):
        for make in (ChannelSpec.loss, ChannelSpec.dephasing):
            assert capacity_factor(Quantity.Q_LOWER, make(0.55)).factor > 0.0


class TestEndToEndConsistency:
    def test_loss_prefactor_identity(self):
        # f = eta pi^2/6 and a rate integral of pi^2 eta/(3 ln2) must give
        # the factor sqrt(eta) through the assembly prefactor
        from broadband_capacity.kernels import LN2

        eta = 0.37
        f = analytic_f_loss(eta)
        rate = math.pi**2 * eta / (3.0 * LN2)
        assert (LN2 / math.pi) * math.sqrt(3.0 / (2.0 * f)) * rate == pytest.approx(
            math.sqrt(eta), rel=1e-12
        )
