import math

import numpy as np
import pytest

from broadband_capacity import (
    ChannelSpec,
    ModeSolveRequest,
    Quantity,
    analytic_occupation_k,
    gamma_fn,
    mode_occupation,
    occupation_solver,
    stationarity_residual,
    thermal_highT_params,
    white_cutoff,
)
from broadband_capacity.kernels import LN2
from broadband_capacity.spectrum import mode_rate_fn

XS = [0.05, 0.2, 0.5, 1.0, 2.0, 4.0]


def _loss_occ(eta, x):
    return (1.0 / eta) / math.expm1(x / eta)


class TestAnalyticOccupation:
    def test_loss_example(self):
        pt = analytic_occupation_k(ChannelSpec.loss(0.5), 0.5 * math.log(2.0))
        assert pt.n == pytest.approx(2.0, abs=1e-12)
        assert not pt.clamped

    def test_white_cutoff(self):
        spec = ChannelSpec.white(0.5, 1.0)
        cutoff = white_cutoff(spec)
        assert cutoff == pytest.approx(0.5 * math.log(3.0), abs=1e-12)
        assert analytic_occupation_k(spec, cutoff * 0.999).n > 0.0
        beyond = analytic_occupation_k(spec, cutoff * 1.001)
        assert beyond.n == 0.0 and beyond.clamped

    def test_thermal_degenerates_to_loss(self):
        spec = ChannelSpec.thermal(0.6, 1e-8)
        for x in XS:
            near = analytic_occupation_k(spec, x, y0=1e-9).n
            assert near == pytest.approx(_loss_occ(0.6, x), abs=1e-9)


class TestModeOccupation:
    def test_classical_loss_closed_form(self):
        for eta in (0.3, 0.7, 1.0):
            spec = ChannelSpec.loss(eta)
            for x in XS:
                pt = mode_occupation(ModeSolveRequest(Quantity.C_LOWER, spec, x))
                assert pt.n == pytest.approx(_loss_occ(eta, x), rel=1e-10, abs=1e-12)

    def test_white_clamps_beyond_cutoff(self):
        spec = ChannelSpec.white(0.5, 1.0)
        cutoff = white_cutoff(spec)
        inside = mode_occupation(ModeSolveRequest(Quantity.C_LOWER, spec, 0.9 * cutoff))
        outside = mode_occupation(ModeSolveRequest(Quantity.C_LOWER, spec, 1.1 * cutoff))
        assert inside.n > 0.0 and not inside.clamped
        assert outside.n == 0.0 and outside.clamped

    def test_matches_analytic_pointwise(self):
        specs_y0 = [
            (ChannelSpec.loss(0.4), 0.0),
            (ChannelSpec.loss(1.0), 0.0),
            (ChannelSpec.white(0.7, 0.5), 0.0),
            (ChannelSpec.thermal(0.6, 0.5), 0.35),  # low-temperature shape
        ]
        for spec, y0 in specs_y0:
            for x in XS:
                expect = analytic_occupation_k(spec, x, y0)
                got = mode_occupation(ModeSolveRequest(Quantity.C_LOWER, spec, x, y0))
                assert got.n == pytest.approx(expect.n, abs=1e-7)
                assert got.clamped == expect.clamped

    def test_interior_residuals(self):
        specs = [
            ChannelSpec.loss(0.8),
            ChannelSpec.white(0.8, 1.0),
            ChannelSpec.dephasing(0.8),
        ]
        for spec in specs:
            for quantity in Quantity:
                for x in XS:
                    pt = mode_occupation(ModeSolveRequest(quantity, spec, x))
                    if pt.clamped:
                        continue
                    res = stationarity_residual(quantity, spec, x, pt.n)
                    assert abs(res) < 1e-8, (spec.model, quantity, x, res)

    def test_thermal_residuals(self):
        spec = ChannelSpec.thermal(0.8, 0.4)
        y0 = 0.3
        for quantity in Quantity:
            for x in XS:
                pt = mode_occupation(ModeSolveRequest(quantity, spec, x, y0))
                if pt.clamped:
                    continue
                res = stationarity_residual(quantity, spec, x, pt.n, y0)
                assert abs(res) < 1e-8

    def test_ce_residual_at_unit_eta(self):
        spec = ChannelSpec.loss(1.0)
        pt = mode_occupation(ModeSolveRequest(Quantity.CE, spec, 1.0))
        # closed solution at eta=1: (1 + 1/n)^2 = e^x
        assert pt.n == pytest.approx(1.0 / math.expm1(0.5), rel=1e-9)
        assert abs(stationarity_residual(Quantity.CE, spec, 1.0, pt.n)) < 1e-8

    def test_profiles_non_increasing(self):
        xs = np.linspace(0.05, 6.0, 40)
        for spec in (ChannelSpec.loss(0.7), ChannelSpec.white(0.7, 1.0), ChannelSpec.dephasing(0.7)):
            for quantity in (Quantity.CE, Quantity.C_LOWER):
                solve = occupation_solver(quantity, spec)
                ns = [solve(float(x)).n for x in xs]
                assert all(a >= b - 1e-10 for a, b in zip(ns, ns[1:]))

    def test_surplus_nonnegative_at_interior_max(self):
        spec = ChannelSpec.white(0.8, 1.0)
        for quantity in Quantity:
            for x in XS:
                pt = mode_occupation(ModeSolveRequest(quantity, spec, x))
                if pt.clamped:
                    continue
                w = mode_rate_fn(quantity, spec, x)
                assert w(pt.n) - x * pt.n / LN2 >= -1e-14

    def test_thermal_quantum_double_cutoff(self):
        spec = ChannelSpec.thermal(0.8, 0.41)
        y0 = 0.1788
        solve = occupation_solver(Quantity.Q_LOWER, spec, y0)
        assert solve(0.05).clamped  # low-frequency noise kills the mode
        assert not solve(1.0).clamped
        assert solve(40.0).clamped  # energy too expensive at high frequency

    def test_request_validation(self):
        with pytest.raises(ValueError):
            ModeSolveRequest(Quantity.CE, ChannelSpec.loss(0.5), 0.0)
        with pytest.raises(ValueError):
            ModeSolveRequest(Quantity.CE, ChannelSpec.thermal(0.5, 0.5), 1.0, -1.0)

    def test_analytic_rejects_dephasing(self):
        with pytest.raises(ValueError):
            analytic_occupation_k(ChannelSpec.dephasing(0.5), 1.0)


class TestHighTemperature:
    def test_reference_point_residuals(self):
        eta, rho = 0.5, 2.0
        xi, y0c = thermal_highT_params(rho, eta)
        assert xi > 1.0
        r1 = xi ** (eta / y0c) - (1.0 - eta) * xi - eta
        lx = math.log(xi)
        r2 = eta * gamma_fn(lx) - (
            (1.0 - eta) / eta * gamma_fn(eta * lx / y0c) + (math.pi**2 / 6.0) / rho**2
        ) * y0c**2
        assert abs(r1) < 1e-8
        assert abs(r2) < 1e-8

    def test_approaches_low_temperature_limit(self):
        # y0 -> eta (and xi -> inf) as the ratio falls to 1
        xi_a, y0_a = thermal_highT_params(1.01, 0.7)
        xi_b, y0_b = thermal_highT_params(1.0001, 0.7)
        assert abs(y0_b - 0.7) < abs(y0_a - 0.7)
        assert abs(y0_b - 0.7) < 1e-3
        assert xi_b > xi_a

    def test_cutoff_zeroes_the_analytic_occupation(self):
        eta, rho = 0.6, 1.8
        xi, y0c = thermal_highT_params(rho, eta)
        x_max = eta * math.log(xi)  # scaled cutoff frequency
        pt = analytic_occupation_k(ChannelSpec.thermal(eta, rho), x_max, y0c)
        assert abs(pt.n) < 1e-8

    def test_domain(self):
        with pytest.raises(ValueError):
            thermal_highT_params(0.9, 0.5)
        with pytest.raises(ValueError):
            thermal_highT_params(2.0, 1.0)
