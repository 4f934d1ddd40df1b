"""Per-mode constrained maximization (water-filling over frequency).

Maximizing a sum of per-mode rates under a total-energy constraint
decouples, through a Lagrange multiplier, into one problem per scaled
frequency x = omega/Omega: maximize

    phi(n) = w(n, nbar(x), eta) - x n / ln2

over n >= 0, where w is the kernel of the targeted quantity.  The
maximizer is the occupation profile F(x).  Interior maxima satisfy a
stationarity equation (implemented here as ``stationarity_residual``);
where no occupation earns a positive rate surplus the optimum sits on the
boundary n = 0, which produces the cutoff frequencies of the noisy
channels.

The solver brackets the maximum with a 64-point logarithmic scan (the
objective for the quantum quantity need not be unimodal: thermal noise
produces both a low- and a high-frequency cutoff), refines by golden
section, and finally polishes interior maxima on the stationarity equation
so the returned occupation is accurate to machine precision rather than to
the golden-section interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import brentq

from .channels import ChannelSpec, NoiseModel, bose_occupation, nbar_at
from .kernels import (
    LN2,
    Quantity,
    a_factor,
    d_factor,
    dephasing_d,
    general_kernel,
    kernel_dephasing,
)
from .special import gamma_fn

# a scan maximum below this surplus (bits) is treated as "send nothing"
CLAMP_TOL = 1e-14

_SCAN_POINTS = 64
_N_FLOOR = 1e-9
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class OccupationPoint(NamedTuple):
    x: float
    n: float
    clamped: bool


@dataclass(frozen=True)
class ModeSolveRequest:
    """One per-mode solve: quantity, channel, scaled frequency and (for
    thermal noise) scaled characteristic frequency."""

    quantity: Quantity
    spec: ChannelSpec
    x: float
    y0: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "quantity", Quantity(self.quantity))
        if self.x <= 0.0:
            raise ValueError(f"scaled frequency must be > 0, got {self.x}")
        if self.spec.model is NoiseModel.THERMAL and self.y0 < 0.0:
            raise ValueError(f"thermal solve needs y0 >= 0, got {self.y0}")


def mode_rate_fn(quantity, spec: ChannelSpec, x, y0=0.0) -> Callable[[float], float]:
    """Rate function n -> w(n, nbar(x), eta) in bits for one mode."""
    quantity = Quantity(quantity)
    eta = spec.eta
    if spec.model is NoiseModel.DEPHASING:
        return lambda n: kernel_dephasing(quantity, n, eta)
    nbar = nbar_at(spec, x, y0)
    kern = general_kernel(quantity)
    return lambda n: kern(n, nbar, eta)


def _golden_max(phi, lo, hi):
    """Golden-section maximization on [lo, hi]; returns best (n, phi(n))
    seen, so the result never falls below the bracketing scan."""
    a, b = lo, hi
    c1 = b - _INV_PHI * (b - a)
    c2 = a + _INV_PHI * (b - a)
    f1, f2 = phi(c1), phi(c2)
    best_n, best_f = (c1, f1) if f1 >= f2 else (c2, f2)
    while b - a > 1e-10 * (1.0 + b):
        if f1 < f2:
            a, c1, f1 = c1, c2, f2
            c2 = a + _INV_PHI * (b - a)
            f2 = phi(c2)
            if f2 > best_f:
                best_n, best_f = c2, f2
        else:
            b, c2, f2 = c2, c1, f1
            c1 = b - _INV_PHI * (b - a)
            f1 = phi(c1)
            if f1 > best_f:
                best_n, best_f = c1, f1
    return best_n, best_f


def _maximize_surplus(w, x):
    """Maximize phi(n) = w(n) - x n/ln2 over n >= 0.

    Returns (n, clamped).  Scans 64 log-spaced points in [1e-9, n_hi] with
    n_hi = max(10, 10/x) (grown if the maximum lands on the right edge),
    golden-sections the bracket, and treats a best surplus below CLAMP_TOL
    as the boundary optimum n = 0.
    """
    n_hi = max(10.0, 10.0 / x)
    for _ in range(4):
        grid = np.geomspace(_N_FLOOR, n_hi, _SCAN_POINTS)
        phis = [w(n) - x * n / LN2 for n in grid]
        i_best = int(np.argmax(phis))
        if i_best < _SCAN_POINTS - 1:
            break
        n_hi *= 100.0
    else:
        raise ArithmeticError(f"occupation bracket did not close below n_hi={n_hi} at x={x}")
    if phis[i_best] < CLAMP_TOL:
        return 0.0, True
    lo = 0.0 if i_best == 0 else grid[i_best - 1]
    hi = grid[i_best + 1]
    phi = lambda n: w(n) - x * n / LN2
    n, f = _golden_max(phi, lo, hi)
    if f < CLAMP_TOL:
        return 0.0, True
    return n, False


def _polish_interior(lhs, x, n):
    """Refine an interior maximizer on its stationarity equation
    lhs(n) = x (lhs decreasing through the root).

    The expansion stays close to the golden-section bracket: for the
    quantum quantity the equation can have a second (minimum) root further
    out, and keeping the golden-section value is better than polishing onto
    the wrong stationary point.
    """
    lo, hi = n / 1.5, n * 1.5
    f_lo, f_hi = lhs(lo) - x, lhs(hi) - x
    for _ in range(4):
        if f_lo > 0.0 >= f_hi:
            break
        if f_lo <= 0.0:
            lo /= 2.0
            f_lo = lhs(lo) - x
        if f_hi > 0.0:
            hi *= 2.0
            f_hi = lhs(hi) - x
    else:
        return n  # no clean bracket; keep the golden-section result
    return brentq(lambda nn: lhs(nn) - x, lo, hi, xtol=1e-300, rtol=8.9e-16)


def _log1p_inv(z):
    # ln(1 + 1/z), safe for small z
    return math.log1p(1.0 / z) if z > 0.0 else math.inf


def stationarity_lhs(quantity, spec: ChannelSpec, x, y0=0.0) -> Callable[[float], float]:
    """Frequency-independent side of the stationarity equation, as a
    function of n.  An interior maximizer of the penalized rate satisfies
    lhs(n) = x; the lhs is ln2 times the derivative of the mode rate.
    """
    quantity = Quantity(quantity)
    eta = spec.eta
    if spec.model is NoiseModel.DEPHASING:
        if quantity is Quantity.C_LOWER:
            if eta == 1.0:
                return _log1p_inv
            return lambda n: _log1p_inv(n) - (1.0 - eta) * _log1p_inv((1.0 - eta) * n)

        def lhs_dephasing(n):
            base = 2.0 * _log1p_inv(n) if quantity is Quantity.CE else _log1p_inv(n)
            if eta == 1.0:
                return base
            dt = dephasing_d(n, eta)
            # ln(1 + 2/(dt - 1)) with the difference rationalized away
            log_term = math.log1p((dt + 1.0) / (2.0 * n * (n + 1.0) * (1.0 - eta)))
            return base - (2.0 * (1.0 - eta) * (2.0 * n + 1.0) / dt) * log_term

        return lhs_dephasing

    nbar = nbar_at(spec, x, y0)
    if quantity is Quantity.C_LOWER:
        return lambda n: eta * _log1p_inv(eta * n + (1.0 - eta) * nbar)

    def lhs_general(n):
        npr = eta * n + (1.0 - eta) * nbar
        base = eta * _log1p_inv(npr)
        if quantity is Quantity.CE:
            base += _log1p_inv(n)
        if eta == 1.0:
            return base
        d = d_factor(n, nbar, eta)
        a = a_factor(n, nbar, eta)
        gap = (1.0 - eta) * (n - nbar)
        # ln(1 + 2/(D + n - n' - 1)) and ln(1 + 2/(D - n + n' - 1)); the
        # denominators are the rationalized correction arguments, and each
        # term drops out exactly when its coefficient does (n = 0, nbar = 0)
        t_plus = (
            math.log1p((d + 1.0 - gap) / (2.0 * (1.0 - eta) * n * (nbar + 1.0)))
            if n > 0.0
            else math.inf
        )
        t_minus = (
            math.log1p((d + 1.0 + gap) / (2.0 * (1.0 - eta) * nbar * (n + 1.0)))
            if nbar > 0.0
            else 0.0
        )
        corr = 0.5 * (a + 1.0 - eta) * t_plus + 0.5 * (a - 1.0 + eta) * t_minus
        return base - corr

    return lhs_general


def stationarity_residual(quantity, spec: ChannelSpec, x, n, y0=0.0):
    """Residual (lhs(n) - x) / max(1, x) of the stationarity equation at an
    interior occupation n > 0."""
    lhs = stationarity_lhs(quantity, spec, x, y0)
    return (lhs(n) - x) / max(1.0, x)


def mode_occupation(req: ModeSolveRequest) -> OccupationPoint:
    """Occupation maximizing the penalized rate at one scaled frequency.

    The returned n is >= 0; ``clamped`` is True when no positive occupation
    beats sending nothing (the mode sits beyond a cutoff).
    """
    w = mode_rate_fn(req.quantity, req.spec, req.x, req.y0)
    n, clamped = _maximize_surplus(w, req.x)
    if not clamped:
        lhs = stationarity_lhs(req.quantity, req.spec, req.x, req.y0)
        n = _polish_interior(lhs, req.x, n)
    return OccupationPoint(req.x, n, clamped)


def occupation_solver(quantity, spec: ChannelSpec, y0=0.0) -> Callable[[float], OccupationPoint]:
    """Memoized x -> OccupationPoint solver for one (quantity, channel)."""
    quantity = Quantity(quantity)
    cache: dict[float, OccupationPoint] = {}

    def solve(x):
        point = cache.get(x)
        if point is None:
            point = mode_occupation(ModeSolveRequest(quantity, spec, x, y0))
            cache[x] = point
        return point

    return solve


def analytic_occupation_k(spec: ChannelSpec, x, y0=0.0) -> OccupationPoint:
    """Closed-form occupation of the classical-rate (Holevo) quantity.

    loss:     (1/eta) / (e^(x/eta) - 1)
    white:    (1/eta) / (e^(x/eta) - 1) - ((1-eta)/eta) nbar, zero beyond
              the cutoff x = eta * ln(1 + 1/((1-eta) nbar))
    thermal:  (1/eta) / (e^(x/eta) - 1) - ((1-eta)/eta) / (e^(x/y0) - 1),
              clamped at zero where negative (high-temperature regime)
    """
    if x <= 0.0:
        raise ValueError(f"scaled frequency must be > 0, got {x}")
    eta = spec.eta
    if eta == 0.0:
        return OccupationPoint(x, 0.0, True)
    lead = bose_occupation(x / eta) / eta
    if spec.model is NoiseModel.LOSS:
        return OccupationPoint(x, lead, False)
    if spec.model is NoiseModel.WHITE:
        n = lead - (1.0 - eta) / eta * spec.nbar
    elif spec.model is NoiseModel.THERMAL:
        if y0 == 0.0:
            return OccupationPoint(x, lead, False)
        n = lead - (1.0 - eta) / eta * bose_occupation(x / y0)
    else:
        raise ValueError(f"no closed-form occupation for model {spec.model.value}")
    if n <= 0.0:
        return OccupationPoint(x, 0.0, True)
    return OccupationPoint(x, n, False)


def white_cutoff(spec: ChannelSpec):
    """Scaled cutoff frequency eta * ln(1 + 1/((1-eta) nbar)) above which
    the white-noise classical-rate profile is zero."""
    if spec.model is not NoiseModel.WHITE:
        raise ValueError("cutoff formula applies to white noise")
    if spec.eta >= 1.0 or spec.nbar == 0.0:
        return math.inf
    return spec.eta * math.log1p(1.0 / ((1.0 - spec.eta) * spec.nbar))


def _log_xi_root(y0c, eta):
    """ln(xi) of the cutoff equation xi^(eta/y0c) = (1-eta) xi + eta.

    In L = ln(xi) the equation reads
        (eta/y0c) L = L + ln(1-eta) + log1p(eta e^-L / (1-eta)),
    which has exactly one root L > 0 when eta < y0c < eta/(1-eta).  Working
    in L keeps the solve finite even where xi overflows a double (y0c close
    to eta makes ln(xi) as large as the bath-to-power ratio demands).
    """
    slope = eta / y0c - 1.0

    def h(l):
        return slope * l - math.log(1.0 - eta) - math.log1p(eta * math.exp(-l) / (1.0 - eta))

    # h rises from 0 at l = 0 to a single hump, then decreases linearly to
    # -inf; the wanted root is the right-hand zero crossing.  Seed the
    # bracket at the hump (h' = 0 there), which can sit arbitrarily close
    # to 0 near the degenerate end of the y0c interval.
    s0 = -slope
    if not 0.0 < s0 < eta:
        raise ArithmeticError(f"cutoff equation has no root for y0c={y0c}, eta={eta}")
    peak = math.log(eta * (1.0 - s0) / ((1.0 - eta) * s0))
    if peak <= 0.0 or h(peak) <= 0.0:
        raise ArithmeticError(f"cutoff root not resolvable at y0c={y0c}, eta={eta}")
    hi = 2.0 * peak
    while h(hi) > 0.0:
        hi *= 2.0
        if hi > 1e15:
            raise ArithmeticError(f"no cutoff bracket at y0c={y0c}, eta={eta}")
    a, b = peak, hi
    for _ in range(200):
        mid = 0.5 * (a + b)
        if h(mid) > 0.0:
            a = mid
        else:
            b = mid
        if b - a <= 1e-14 * b:
            break
    return 0.5 * (a + b)


def _highT_log_params(rho_t, eta):
    """(ln xi, y0c) of the high-temperature classical-rate cutoff."""
    if not 0.0 < eta < 1.0:
        raise ValueError(f"need 0 < eta < 1, got {eta}")
    if rho_t <= 1.0:
        raise ValueError(f"high-temperature regime needs rho_t > 1, got {rho_t}")

    def outer(y0c):
        lx = _log_xi_root(y0c, eta)
        rhs = ((1.0 - eta) / eta * gamma_fn(eta * lx / y0c) + (math.pi**2 / 6.0) / rho_t**2) * y0c**2
        return eta * gamma_fn(lx) - rhs

    lo = eta * (1.0 + 1e-12)
    f_lo = outer(lo)
    # the upper endpoint eta/(1-eta) is the infinite-temperature limit and
    # numerically degenerate; approach it only as far as the root demands
    edge = eta / (1.0 - eta)
    f_hi = math.inf
    for margin in (1e-6, 1e-8, 1e-10):
        hi = edge * (1.0 - margin)
        f_hi = outer(hi)
        if f_hi < 0.0:
            break
    if not (f_lo > 0.0 > f_hi):
        raise ArithmeticError(
            f"no y0 bracket for rho_t={rho_t}, eta={eta}: outer({lo})={f_lo}, outer({hi})={f_hi}"
        )
    a, b = lo, hi
    for _ in range(200):
        mid = 0.5 * (a + b)
        if outer(mid) > 0.0:
            a = mid
        else:
            b = mid
        if b - a <= 1e-12 * b:
            break
    y0c = 0.5 * (a + b)
    return _log_xi_root(y0c, eta), y0c


def thermal_highT_params(rho_t, eta):
    """Cutoff parameters (xi, y0c) of the classical-rate thermal profile in
    the high-temperature regime rho_t > 1.

    xi > 1 and y0c solve the coupled pair

        xi^(eta/y0c) - (1-eta) xi - eta = 0
        eta Gamma(ln xi) = [((1-eta)/eta) Gamma(eta ln xi / y0c)
                             + (pi^2/6) / rho_t^2] y0c^2

    by nested bisection on y0c in (eta, eta/(1-eta)) -- the interval on
    which the xi equation has a root above 1 -- with the xi solve done in
    log space.  xi itself overflows to inf for rho_t extremely close to 1;
    use the log-space internals in that regime.
    """
    log_xi, y0c = _highT_log_params(rho_t, eta)
    return (math.exp(log_xi) if log_xi < 700.0 else math.inf), y0c
