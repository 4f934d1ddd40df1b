"""Closed-form single-mode entropy kernels for Gaussian bosonic channels.

A single bosonic mode carrying ``n`` photons on average is coupled to a
noise mode carrying ``nbar`` photons through a beam splitter of
transmissivity ``eta`` (the quantum efficiency).  The per-mode rates of the
three communication quantities we track are closed-form combinations of the
thermal entropy function g:

* ``kernel_ce``  -- quantum mutual information of the mode (entanglement
  assisted rate),
* ``kernel_k``   -- Holevo rate of a Gaussian-modulated coherent-state code
  (classical rate without assistance),
* ``kernel_q``   -- coherent information (quantum rate), which may be
  negative.

The ``*_dephasing`` variants describe a nonlinear noise model in which the
reservoir occupation tracks the signal occupation (``nbar = n``), so the
mean photon number is preserved while phase correlations are lost.

All functions are pure and operate on scalars; they are safe to call from
any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

LN2 = math.log(2.0)

# below this the direct expression for g loses digits to cancellation
_G_SERIES_CUTOFF = 1e-8
# tolerance for arguments that should be nonnegative but carry rounding dust
_NEG_TOL = 1e-12


class Quantity(str, Enum):
    """Which communication quantity a kernel (or a solver run) targets."""

    CE = "ce"
    C_LOWER = "c_lower"
    Q_LOWER = "q_lower"


def g_entropy(x):
    """Entropy g(x) = (x+1)log2(x+1) - x log2(x) of a thermal state with
    mean photon number x, in bits.

    g(0) = 0, g is increasing and concave, and g(x) ~ log2(x) + 1/ln2 for
    large x.  Arguments in (-1e-12, 0) are treated as rounding noise and
    clamped to zero; anything more negative raises ValueError.
    """
    if x <= 0.0:
        if x < -_NEG_TOL:
            raise ValueError(f"g_entropy: argument must be >= 0, got {x}")
        return 0.0
    if x < _G_SERIES_CUTOFF:
        # leading terms of the expansion; avoids 0*log(0) (and 1/x, which
        # overflows for subnormal arguments)
        return x * (1.0 / LN2 - math.log2(x))
    return (x + 1.0) * math.log2(x + 1.0) - x * math.log2(x)


def _check_mode(n, nbar, eta):
    if n < 0.0 or nbar < 0.0:
        raise ValueError(f"photon numbers must be >= 0 (n={n}, nbar={nbar})")
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"quantum efficiency must be in [0, 1], got {eta}")


@dataclass(frozen=True)
class ModeParams:
    """Signal occupation ``n``, noise occupation ``nbar`` and quantum
    efficiency ``eta`` of one mode."""

    n: float
    nbar: float = 0.0
    eta: float = 1.0

    def __post_init__(self):
        _check_mode(self.n, self.nbar, self.eta)

    def as_tuple(self):
        return (self.n, self.nbar, self.eta)


def output_photons(n, nbar, eta):
    """Mean photon number eta*n + (1-eta)*nbar of the mode after the
    beam-splitter coupling."""
    _check_mode(n, nbar, eta)
    return eta * n + (1.0 - eta) * nbar


def d_factor(n, nbar, eta):
    """Square root of (n + n' + 1)^2 - 4 eta n (n+1), with n' the output
    photon number.  Always >= 1.

    The radicand is evaluated as 4 n (1-eta)(nbar+1) + (1 + (1-eta)(nbar-n))^2,
    an algebraically identical sum of nonnegative terms: the textbook
    difference form cancels catastrophically for large n and can go negative
    at the eta = 1 and nbar = 0 special points.
    """
    _check_mode(n, nbar, eta)
    rad = 4.0 * n * (1.0 - eta) * (nbar + 1.0) + (1.0 + (1.0 - eta) * (nbar - n)) ** 2
    if rad < 0.0:
        if rad < -_NEG_TOL:
            raise ArithmeticError(f"d_factor: negative radicand {rad}")
        rad = 0.0
    return math.sqrt(rad)


def a_factor(n, nbar, eta):
    """Factor [(1-3 eta) n + (1-eta) + (1+eta) n'] / D entering the
    stationarity equations for the mutual-information and coherent-
    information kernels."""
    _check_mode(n, nbar, eta)
    npr = eta * n + (1.0 - eta) * nbar
    d = d_factor(n, nbar, eta)
    return ((1.0 - 3.0 * eta) * n + (1.0 - eta) + (1.0 + eta) * npr) / d


def _correction_args(n, nbar, eta, d):
    """Arguments (D + n - n' - 1)/2 and (D - n + n' - 1)/2 of the two
    correction entropies, in rationalized form.

    Both are >= 0; the direct half-difference forms lose all digits when
    the argument is near zero (large n, eta near 1, or nbar = 0).
    """
    gap = (1.0 - eta) * (n - nbar)  # n - n'
    e_plus = 2.0 * (1.0 - eta) * n * (nbar + 1.0) / (d + 1.0 - gap)
    e_minus = 2.0 * (1.0 - eta) * nbar * (n + 1.0) / (d + 1.0 + gap)
    return e_plus, e_minus


def kernel_ce(n, nbar, eta):
    """Quantum mutual information of one mode in bits:
    g(n) + g(n') - g((D+n-n'-1)/2) - g((D-n+n'-1)/2).

    Nonnegative; vanishes at n = 0 and at eta = 0.
    """
    _check_mode(n, nbar, eta)
    npr = eta * n + (1.0 - eta) * nbar
    d = d_factor(n, nbar, eta)
    e_plus, e_minus = _correction_args(n, nbar, eta, d)
    return g_entropy(n) + g_entropy(npr) - g_entropy(e_plus) - g_entropy(e_minus)


def kernel_k(n, nbar, eta):
    """Holevo rate of the Gaussian coherent-state code in bits:
    g(n') - g((1-eta) nbar).  Nonnegative; vanishes at n = 0."""
    _check_mode(n, nbar, eta)
    npr = eta * n + (1.0 - eta) * nbar
    return g_entropy(npr) - g_entropy((1.0 - eta) * nbar)

def kernel_q(n, nbar, eta):
    """Coherent information of one mode in bits:
    g(n') - g((D+n-n'-1)/2) - g((D-n+n'-1)/2).

    Equals kernel_ce - g(n) exactly; may be negative (no useful quantum
    rate through the mode).
    """
    _check_mode(n, nbar, eta)
    npr = eta * n + (1.0 - eta) * nbar
    d = d_factor(n, nbar, eta)
    e_plus, e_minus = _correction_args(n, nbar, eta, d)
    return g_entropy(npr) - g_entropy(e_plus) - g_entropy(e_minus)


def dephasing_d(n, eta):
    """Factor sqrt(1 + 4 n (n+1)(1-eta)) of the dephasing kernels."""
    return math.sqrt(1.0 + 4.0 * n * (n + 1.0) * (1.0 - eta))


def _dephasing_half(n, eta, dt):
    # (dt - 1)/2 without cancellation at eta -> 1
    return 2.0 * n * (n + 1.0) * (1.0 - eta) / (dt + 1.0)


def kernel_ce_dephasing(n, eta):
    """Mutual-information kernel of the dephasing channel:
    2 [g(n) - g((D~ - 1)/2)] with D~ = sqrt(1 + 4 n (n+1)(1-eta))."""
    _check_mode(n, n, eta)
    dt = dephasing_d(n, eta)
    return 2.0 * (g_entropy(n) - g_entropy(_dephasing_half(n, eta, dt)))


def kernel_k_dephasing(n, eta):
    """Holevo kernel of the dephasing channel: g(n) - g((1-eta) n)."""
    _check_mode(n, n, eta)
    return g_entropy(n) - g_entropy((1.0 - eta) * n)


def kernel_q_dephasing(n, eta):
    """Coherent-information kernel of the dephasing channel:
    g(n) - 2 g((D~ - 1)/2).  Negative for eta < 1/2."""
    _check_mode(n, n, eta)
    dt = dephasing_d(n, eta)
    return g_entropy(n) - 2.0 * g_entropy(_dephasing_half(n, eta, dt))


_DEPHASING_KERNELS = {
    Quantity.CE: kernel_ce_dephasing,
    Quantity.C_LOWER: kernel_k_dephasing,
    Quantity.Q_LOWER: kernel_q_dephasing,
}

_GENERAL_KERNELS = {
    Quantity.CE: kernel_ce,
    Quantity.C_LOWER: kernel_k,
    Quantity.Q_LOWER: kernel_q,
}


def kernel_dephasing(kind, n, eta):
    """Dephasing-channel kernel of the requested kind (a Quantity or its
    string value).  Equals the general kernel evaluated at nbar = n."""
    return _DEPHASING_KERNELS[Quantity(kind)](n, eta)


def general_kernel(kind):
    """Kernel function (n, nbar, eta) -> bits for the requested kind."""
    return _GENERAL_KERNELS[Quantity(kind)]


@dataclass(frozen=True)
class KernelEval:
    """Derived per-mode quantities together with one kernel value."""

    nprime: float
    dfac: float
    afac: float
    value: float


def evaluate_kernel(kind, params: ModeParams) -> KernelEval:
    """Kernel value of the requested kind plus the derived quantities
    n', D and A for the mode."""
    n, nbar, eta = params.as_tuple()
    return KernelEval(
        nprime=output_photons(n, nbar, eta),
        dfac=d_factor(n, nbar, eta),
        afac=a_factor(n, nbar, eta),
        value=general_kernel(kind)(n, nbar, eta),
    )
