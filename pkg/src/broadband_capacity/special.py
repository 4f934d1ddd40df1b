"""Special functions of the broadband integrals.

``gamma_fn`` is the incomplete Bose energy integral; it fixes the energy
carried by a Bose-Einstein occupation profile up to a cutoff and saturates
at pi^2/6.  ``lambda_fn`` integrates the thermal entropy of a scaled
Bose-Einstein profile over all frequencies and appears in the closed-form
classical-capacity factors; lambda_fn(1) = pi^2/3.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

from .kernels import LN2, g_entropy

_QUAD_OPTS = dict(epsabs=1e-13, epsrel=1e-10, limit=200)


def _bose_energy_integrand(y):
    # y/(e^y - 1), extended by continuity at 0
    if y == 0.0:
        return 1.0
    if y > 709.0:
        return 0.0
    return y / math.expm1(y)


def gamma_fn(x):
    """Integral of y/(e^y - 1) from 0 to x (x = inf allowed).
    Increasing, gamma_fn(0) = 0, gamma_fn(inf) = pi^2/6."""
    if x < 0.0:
        raise ValueError(f"gamma_fn needs x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        # split keeps the adaptive rule on the exponential tail accurate
        head = quad(_bose_energy_integrand, 0.0, 30.0, **_QUAD_OPTS)[0]
        tail = quad(_bose_energy_integrand, 30.0, 80.0, **_QUAD_OPTS)[0]
        return head + tail
    if x <= 30.0:
        return quad(_bose_energy_integrand, 0.0, x, **_QUAD_OPTS)[0]
    return quad(_bose_energy_integrand, 0.0, 30.0, **_QUAD_OPTS)[0] + quad(
        _bose_energy_integrand, 30.0, min(x, 80.0), **_QUAD_OPTS
    )[0]


def bose_entropy_integral(scale, upper=math.inf):
    """Integral of g(scale/(e^y - 1)) over y in (0, upper).

    The integrand diverges like log2(scale/y) at y -> 0; the (0, 1] part is
    computed under the substitution y = e^(-t), which maps it onto a
    smooth, exponentially decaying integrand.
    """
    if scale < 0.0:
        raise ValueError(f"need scale >= 0, got {scale}")
    if scale == 0.0 or upper <= 0.0:
        return 0.0

    def integrand(y):
        if y > 709.0:
            return 0.0
        return g_entropy(scale / math.expm1(y))

    head_cut = min(1.0, upper)

    def substituted(t):
        # y = e^-t, dy = -e^-t dt; t runs over (log(1/head_cut), inf)
        y = math.exp(-t)
        return integrand(y) * y

    t_lo = -math.log(head_cut)
    head = quad(substituted, t_lo, 60.0, **_QUAD_OPTS)[0]
    if upper <= 1.0:
        return head
    if math.isinf(upper):
        tail = quad(integrand, 1.0, 60.0, **_QUAD_OPTS)[0] + quad(integrand, 60.0, 120.0, **_QUAD_OPTS)[0]
    else:
        tail = quad(integrand, 1.0, min(upper, 120.0), **_QUAD_OPTS)[0]
    return head + tail


def lambda_fn(x):
    """ln2 times the integral of g(x/(e^y - 1)) over y in (0, inf).
    lambda_fn(0) = 0 and lambda_fn(1) = pi^2/3."""
    if x < 0.0:
        raise ValueError(f"lambda_fn needs x >= 0, got {x}")
    return LN2 * bose_entropy_integral(x)
