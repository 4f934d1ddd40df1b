"""Frequency-integrated capacities of the broadband channel.

With the per-mode occupation profile F(x) from :mod:`spectrum`, the
broadband value of each quantity factorizes into the transmission time, the
noiseless classical rate R_C = sqrt(pi P / (3 hbar))/ln2, and a
dimensionless capacity factor

    W = (ln2/pi) sqrt(3 / (2 f)) * integral of w(F(x), nbar(x), eta) dx,

where f = integral of x F(x) dx pins the input power to the water-filling
scale Omega = sqrt(2 pi P / (hbar f)).  Thermal noise adds one scalar
unknown, the scaled characteristic frequency y0 = omega_bar/Omega, fixed by
the dimensionless fixed point y0^2 = (6/pi^2) rho_t^2 f(y0) (the energy
constraint re-expressed through the thermal ratio rho_t = R_T/R_C).

Closed forms exist for the classical-rate factor (``analytic_K``); the
entanglement-assisted and quantum factors always run through the numeric
pipeline (``capacity_factor``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import quad

from .channels import (
    ChannelSpec,
    NoiseModel,
    PhysicalInputs,
    HBAR,
    classical_rate,
    nbar_at,
    thermal_ratio,
)
from .kernels import LN2, Quantity, g_entropy, kernel_dephasing
from .special import bose_entropy_integral, gamma_fn, lambda_fn
from .spectrum import (
    OccupationPoint,
    _highT_log_params,
    analytic_occupation_k,
    mode_rate_fn,
    occupation_solver,
    white_cutoff,
)

_QUAD_OPTS = dict(epsabs=1e-13, epsrel=1e-9, limit=300)
_PROBE_LO = 1e-4
_PROBE_HI = 600.0
_PROBE_POINTS = 72


@dataclass(frozen=True)
class SpectrumSolution:
    """Solved broadband spectrum for one quantity on one channel."""

    quantity: Quantity
    spec: ChannelSpec
    y0: float
    f_value: float
    factor: float
    profile: tuple[OccupationPoint, ...] = ()


def _support(solve):
    """(lo, hi) interval outside which the occupation is clamped to zero,
    or None when no frequency earns a positive surplus.

    Probes a logarithmic grid and bisects the on/off edges; the clamping
    rule in the solver guarantees the profile switches off at finite x even
    for channels whose formal cutoff sits at infinity.
    """
    xs = np.geomspace(_PROBE_LO, _PROBE_HI, _PROBE_POINTS)
    alive = [solve(float(x)).n > 0.0 for x in xs]
    if not any(alive):
        return None
    first = alive.index(True)
    last = len(alive) - 1 - alive[::-1].index(True)

    if first == 0:
        lo = 0.0
    else:
        dead, live = xs[first - 1], xs[first]
        for _ in range(60):
            mid = math.sqrt(dead * live)
            if solve(mid).n > 0.0:
                live = mid
            else:
                dead = mid
        lo = dead

    hi = xs[last]
    if last == len(xs) - 1:
        while solve(hi).n > 0.0:
            hi *= 2.0
            if hi > 1e7:
                raise ArithmeticError("occupation support did not close")
        live = hi / 2.0
        dead = hi
    else:
        live, dead = xs[last], xs[last + 1]
    for _ in range(60):
        mid = math.sqrt(live * dead)
        if solve(mid).n > 0.0:
            live = mid
        else:
            dead = mid
    return lo, dead


def _f_on_support(solve, support):
    if support is None:
        return 0.0
    lo, hi = support
    return quad(lambda x: x * solve(x).n, lo, hi, **_QUAD_OPTS)[0]


def f_integral(quantity, spec: ChannelSpec, y0=0.0):
    """Energy integral f = integral of x F(x) dx for the solved profile."""
    solve = occupation_solver(quantity, spec, y0)
    return _f_on_support(solve, _support(solve))


def solve_y0(quantity, spec: ChannelSpec):
    """Scaled characteristic frequency of a thermal channel: the root of
    y^2 = (6/pi^2) rho_t^2 f(y), found by bisection to |dy| < 1e-8.
    Returns 0 for channels without a characteristic frequency."""
    if spec.model is not NoiseModel.THERMAL or spec.rho_t == 0.0:
        return 0.0
    coef = 6.0 / math.pi**2 * spec.rho_t**2

    def gap(y):
        return y * y - coef * f_integral(quantity, spec, y)

    lo = 1e-6
    if gap(lo) >= 0.0:
        # no energy flows even without noise (e.g. quantum rate, eta <= 1/2)
        return 0.0
    hi = 1.0
    while gap(hi) < 0.0:
        hi *= 2.0
        if hi > 64.0:
            raise ArithmeticError(f"y0 bracket did not close for {quantity}, {spec}")
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _rate_integrand(quantity, spec: ChannelSpec, y0, solve):
    if spec.model is NoiseModel.DEPHASING:
        def integrand(x):
            return kernel_dephasing(quantity, solve(x).n, spec.eta)
    else:
        def integrand(x):
            w = mode_rate_fn(quantity, spec, x, y0)
            return w(solve(x).n)
    return integrand


def capacity_factor(quantity, spec: ChannelSpec, y0=None, profile_points=0):
    """Numeric capacity factor for one quantity: solves the occupation
    profile, the energy integral and (for thermal noise) the y0 fixed
    point, and assembles W = (ln2/pi) sqrt(3/(2 f)) * integral of w dx.
    """
    quantity = Quantity(quantity)
    if y0 is None:
        y0 = solve_y0(quantity, spec)
    solve = occupation_solver(quantity, spec, y0)
    support = _support(solve)
    profile = ()
    if support is not None and profile_points:
        lo, hi = support
        grid = np.linspace(max(lo, 1e-6), hi, profile_points)
        profile = tuple(solve(float(x)) for x in grid)
    if support is None:
        return SpectrumSolution(quantity, spec, y0, 0.0, 0.0, profile)
    f_value = _f_on_support(solve, support)
    if f_value <= 0.0:
        return SpectrumSolution(quantity, spec, y0, 0.0, 0.0, profile)
    lo, hi = support
    rate = quad(_rate_integrand(quantity, spec, y0, solve), lo, hi, **_QUAD_OPTS)[0]
    factor = (LN2 / math.pi) * math.sqrt(3.0 / (2.0 * f_value)) * rate
    return SpectrumSolution(quantity, spec, y0, f_value, factor, profile)


def _analytic_k_white(spec: ChannelSpec):
    eta, nbar = spec.eta, spec.nbar
    if nbar == 0.0 or eta == 1.0:
        return math.sqrt(eta)
    if eta == 0.0:
        return 0.0
    s = math.log1p(1.0 / ((1.0 - eta) * nbar))
    f_value = eta * (gamma_fn(s) - (1.0 - eta) * s * s * nbar / 2.0)
    rate = eta * (bose_entropy_integral(1.0, s) - s * g_entropy((1.0 - eta) * nbar))
    return (LN2 / math.pi) * math.sqrt(3.0 / (2.0 * f_value)) * rate


def _analytic_k_thermal(spec: ChannelSpec):
    eta, rho = spec.eta, spec.rho_t
    if rho <= 1.0:
        return math.sqrt(eta + (1.0 - eta) * rho * rho) - lambda_fn(1.0 - eta) / lambda_fn(1.0) * rho
    if eta == 1.0:
        return 1.0
    if eta == 0.0:
        return 0.0
    upper, y0c = _highT_log_params(rho, eta)

    def integrand(y):
        if y <= 0.0:
            # the two log divergences cancel to this finite limit
            return math.log2(eta / ((1.0 - eta) * y0c))
        first = g_entropy(1.0 / math.expm1(y)) if y <= 709.0 else 0.0
        t = y * eta / y0c
        second = g_entropy((1.0 - eta) / math.expm1(t)) if t <= 709.0 else 0.0
        return first - second

    rate = quad(integrand, 0.0, upper, **_QUAD_OPTS)[0]
    return (3.0 * eta * LN2 / (math.pi**2 * y0c)) * rho * rate


def analytic_K(spec: ChannelSpec):
    """Closed-form classical-rate factor: sqrt(eta) for loss, the
    cutoff-integral form for white noise, and the low-/high-temperature
    branches for thermal noise."""
    if spec.model is NoiseModel.LOSS:
        return math.sqrt(spec.eta)
    if spec.model is NoiseModel.WHITE:
        return _analytic_k_white(spec)
    if spec.model is NoiseModel.THERMAL:
        if spec.rho_t == 0.0:
            return math.sqrt(spec.eta)
        return _analytic_k_thermal(spec)
    raise ValueError(f"no closed-form classical factor for model {spec.model.value}")


def analytic_y0_lowT(spec: ChannelSpec):
    """Low-temperature closed form of the classical-rate y0:
    eta rho / sqrt(eta + (1-eta) rho^2), valid for rho_t <= 1."""
    if spec.model is not NoiseModel.THERMAL:
        return 0.0
    rho, eta = spec.rho_t, spec.eta
    return eta * rho / math.sqrt(eta + (1.0 - eta) * rho * rho)


def q_alt_bound(ce_factor):
    """Quantum-rate factor implied by the assisted rate: max(ce - 1, 0)."""
    if ce_factor < 0.0:
        raise ValueError(f"capacity factor must be >= 0, got {ce_factor}")
    return max(ce_factor - 1.0, 0.0)


def rate_rc(inputs: PhysicalInputs):
    """Noiseless classical rate R_C in bits/s for the given power."""
    return classical_rate(inputs.power)


def omega_scale(quantity, spec: ChannelSpec, inputs: PhysicalInputs):
    """Water-filling frequency scale Omega = sqrt(2 pi P / (hbar f)) in
    rad/s (solves the spectrum to obtain f)."""
    sol = capacity_factor(quantity, spec)
    if sol.f_value <= 0.0:
        raise ArithmeticError(f"no occupied modes for {quantity} on {spec}")
    return omega_from_f(sol.f_value, inputs.power)


def omega_from_f(f_value, power):
    return math.sqrt(2.0 * math.pi * power / (HBAR * f_value))


@dataclass(frozen=True)
class CapacityReport:
    """All capacity factors plus absolute rates for given physical inputs.

    Factors multiply T * R_C; ``rates`` holds absolute transmitted bits
    (qubits for the quantum entries) over the transmission time.
    """

    spec: ChannelSpec
    inputs: PhysicalInputs
    rho_t: float
    rc_bits_per_sec: float
    ce_factor: float
    c_lower_factor: float
    c_upper_factor: float
    q_lower_factor: float
    q_alt_factor: float
    qe_factor: float
    solutions: dict
    rates: dict


def capacity_report(spec: ChannelSpec, inputs: PhysicalInputs) -> CapacityReport:
    """Solve all quantities on one channel and assemble factors and rates.

    For thermal channels the ratio rho_t is taken from the bath temperature
    when one is supplied, otherwise from the spec; each quantity gets its
    own y0 fixed point.
    """
    if spec.model is NoiseModel.THERMAL and inputs.temperature is not None:
        spec = replace(spec, rho_t=thermal_ratio(inputs))
    solutions = {}
    for quantity in (Quantity.CE, Quantity.C_LOWER, Quantity.Q_LOWER):
        try:
            solutions[quantity] = capacity_factor(quantity, spec)
        except Exception as exc:
            raise ArithmeticError(f"{quantity.value} solve failed on {spec}: {exc}") from exc
    ce = solutions[Quantity.CE].factor
    c_lower = solutions[Quantity.C_LOWER].factor
    q_lower = max(solutions[Quantity.Q_LOWER].factor, 0.0)
    factors = {
        "ce": ce,
        "c_lower": c_lower,
        "c_upper": min(1.0, ce),
        "q_lower": q_lower,
        "q_alt": q_alt_bound(ce),
        "qe": ce / 2.0,
    }
    rc = rate_rc(inputs)
    scale = inputs.transmission_time * rc
    return CapacityReport(
        spec=spec,
        inputs=inputs,
        rho_t=spec.rho_t,
        rc_bits_per_sec=rc,
        ce_factor=factors["ce"],
        c_lower_factor=factors["c_lower"],
        c_upper_factor=factors["c_upper"],
        q_lower_factor=factors["q_lower"],
        q_alt_factor=factors["q_alt"],
        qe_factor=factors["qe"],
        solutions=solutions,
        rates={name: value * scale for name, value in factors.items()},
    )


def analytic_f_loss(eta):
    """Energy integral of the loss-channel classical profile: eta pi^2/6."""
    return eta * math.pi**2 / 6.0


def analytic_f_white(spec: ChannelSpec):
    """Energy integral of the white-noise classical profile:
    eta [Gamma(s) - (1-eta) s^2 nbar / 2] with s the cutoff scale."""
    s = white_cutoff(spec) / spec.eta
    return spec.eta * (gamma_fn(s) - (1.0 - spec.eta) * s * s * spec.nbar / 2.0)
