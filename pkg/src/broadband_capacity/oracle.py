"""Independent Gaussian-state check of the single-mode entropy kernels.

The kernels in :mod:`broadband_capacity.kernels` assume that the optimal
single-mode input is an unsqueezed thermal state.  This module rebuilds the
same entropic quantities from the covariance-matrix side: a one-mode
Gaussian state is parametrized by a scale ``n0``, squeezing ``r``,
cross-correlation ``c`` and displacement contribution ``m``; the input,
output and exchange entropies then depend only on the eigenvalues of the
(dimensionless, hbar = 1) correlation matrix.  Mutual and coherent
information computed this way must agree with ``kernel_ce``/``kernel_q``
for thermal inputs, and scanning over unequal eigenvalue splittings at
fixed photon number verifies that squeezing never helps.

The four exchange eigenvalues are obtained from the closed-form scalars L0
and L1 rather than by diagonalizing the two-mode covariance matrix.  The
discriminant L1 + L0^2 is evaluated in a factored form (quadratic in
(1-eta)^2 (lam+ - lam-)^2) because the direct difference cancels to noise
exactly where the comparison tolerances are tightest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import g_entropy

_HEISENBERG_TOL = 1e-12
_DISC_TOL = 1e-9


@dataclass(frozen=True)
class GaussianModeState:
    """One-mode Gaussian state: correlation matrix (hbar/2) *
    [[n0 e^r, c], [c, n0 e^-r]] plus a displacement photon contribution m.
    """

    n0: float
    r: float = 0.0
    c: float = 0.0
    m: float = 0.0

    def __post_init__(self):
        bound = math.sqrt(self.c**2 + 1.0)
        if self.n0 < bound - _HEISENBERG_TOL:
            raise ValueError(
                f"uncertainty bound violated: n0 = {self.n0} < sqrt(c^2 + 1) = {bound}"
            )
        if self.m < 0.0:
            raise ValueError(f"displacement contribution m must be >= 0, got {self.m}")

    def spectrum(self):
        """Eigenvalues (lam_plus, lam_minus) of the correlation matrix over
        hbar: (n0 cosh r +- sqrt((n0 sinh r)^2 + c^2)) / 2."""
        half_spread = math.sqrt((self.n0 * math.sinh(self.r)) ** 2 + self.c**2) / 2.0
        center = self.n0 * math.cosh(self.r) / 2.0
        return center + half_spread, center - half_spread

    @property
    def mean_photons(self):
        """Mean photon number (lam+ + lam- - 1 + m)/2 of the state."""
        return (self.n0 * math.cosh(self.r) - 1.0 + self.m) / 2.0


def make_state(n0, r=0.0, c=0.0, m=0.0) -> GaussianModeState:
    """Validated Gaussian mode state (see :class:`GaussianModeState`)."""
    return GaussianModeState(n0, r, c, m)


def thermal_state(n) -> GaussianModeState:
    """Unsqueezed thermal state with mean photon number n."""
    return GaussianModeState(2.0 * n + 1.0)


def state_from_spectrum(lam_plus, lam_minus) -> GaussianModeState:
    """Zero-displacement state with prescribed correlation eigenvalues,
    realized with c = 0 and squeezing e^(2r) = lam+/lam-."""
    if not lam_plus >= lam_minus > 0.0:
        raise ValueError(f"need lam+ >= lam- > 0, got ({lam_plus}, {lam_minus})")
    n0 = 2.0 * math.sqrt(lam_plus * lam_minus)
    r = 0.5 * math.log(lam_plus / lam_minus)
    return GaussianModeState(n0, r, 0.0, 0.0)


def _evolved_spectrum(lam_plus, lam_minus, nbar, eta):
    shift = (1.0 - eta) * (nbar + 0.5)
    return eta * lam_plus + shift, eta * lam_minus + shift


@dataclass(frozen=True)
class SpectralPair:
    """Correlation-matrix eigenvalues before and after the channel."""

    lam_plus: float
    lam_minus: float
    lamp_plus: float
    lamp_minus: float


def spectral_pair(state: GaussianModeState, nbar, eta) -> SpectralPair:
    lp, lm = state.spectrum()
    lpp, lmp = _evolved_spectrum(lp, lm, nbar, eta)
    return SpectralPair(lp, lm, lpp, lmp)


def input_entropy(state: GaussianModeState):
    """Entropy g(sqrt(lam+ lam-) - 1/2) of the state, in bits."""
    lp, lm = state.spectrum()
    return g_entropy(math.sqrt(lp * lm) - 0.5)


def output_entropy(state: GaussianModeState, nbar, eta):
    """Entropy of the state after the beam-splitter coupling to a noise
    mode with occupation nbar, in bits."""
    lp, lm = state.spectrum()
    lpp, lmp = _evolved_spectrum(lp, lm, nbar, eta)
    return g_entropy(math.sqrt(lpp * lmp) - 0.5)


@dataclass(frozen=True)
class ExchangeEigenvalues:
    """Exchange-entropy spectrum: the four signed eigenvalues (two +- pairs
    with moduli nu_a, nu_b >= 1/2) and the scalars l0, l1 they derive from."""

    lam1: float
    lam2: float
    lam3: float
    lam4: float
    l0: float
    l1: float

    @property
    def moduli(self):
        return (abs(self.lam1), abs(self.lam3))


def exchange_spectrum(lam_plus, lam_minus, nbar, eta) -> ExchangeEigenvalues:
    """Closed-form eigenvalues of the jointly evolved (channel x identity)
    purification of a state with correlation eigenvalues lam+-.

    The squared moduli are (-L0 +- sqrt(L1 + L0^2)) / 8; -L0 and -L1 are
    sums of nonnegative terms and the discriminant is evaluated in factored
    form for stability.
    """
    s = lam_plus + lam_minus
    p = lam_plus * lam_minus
    ome = 1.0 - eta
    neg_l0 = (
        (1.0 + eta * eta)
        + 4.0 * ome * ome * nbar * nbar
        + 4.0 * ome * (ome + eta * s) * nbar
        + 2.0 * eta * ome * s
        + 4.0 * ome * ome * p
    )
    neg_l1 = 8.0 * ome * (1.0 + 2.0 * nbar) * (2.0 * ome * (1.0 + 2.0 * nbar) * p + eta * s) + 4.0 * eta * eta

    # discriminant L1 + L0^2 as a quadratic in u = (1-eta)^2 (lam+ - lam-)^2
    beta = 2.0 * nbar + 1.0
    u = (ome * (lam_plus - lam_minus)) ** 2
    coeff_a = (eta * (s - beta)) ** 2 - 2.0 * eta * (beta * beta + s * s - 2.0) + (s + beta) ** 2
    coeff_b = (eta * (s - beta)) ** 2 - 2.0 * eta * (beta * beta + s * s - s * beta - 1.0) + (s * s - beta * beta)
    disc = u * u - 2.0 * coeff_b * u + (ome * (s - beta)) ** 2 * coeff_a
    if disc < 0.0:
        if disc < -_DISC_TOL:
            raise ArithmeticError(f"exchange spectrum: negative discriminant {disc}")
        disc = 0.0
    root = math.sqrt(disc)

    nu_a_sq = (neg_l0 + root) / 8.0
    # pair product nu_a^2 nu_b^2 = -L1/64, avoids subtracting near-equal terms
    nu_b_sq = (neg_l1 / 64.0) / nu_a_sq if nu_a_sq > 0.0 else (neg_l0 - root) / 8.0
    nu_a = math.sqrt(max(nu_a_sq, 0.0))
    nu_b = math.sqrt(max(nu_b_sq, 0.0))
    return ExchangeEigenvalues(nu_a, -nu_a, nu_b, -nu_b, -neg_l0, -neg_l1)


def exchange_entropy(state: GaussianModeState, nbar, eta):
    """Entropy of the joint state of channel output and untouched
    purification arm: (1/2) sum_k g(|lam_k| - 1/2), in bits."""
    lp, lm = state.spectrum()
    return exchange_entropy_from_spectrum(lp, lm, nbar, eta)


def exchange_entropy_from_spectrum(lam_plus, lam_minus, nbar, eta):
    ev = exchange_spectrum(lam_plus, lam_minus, nbar, eta)
    nu_a, nu_b = ev.moduli
    return g_entropy(max(nu_a - 0.5, 0.0)) + g_entropy(max(nu_b - 0.5, 0.0))


def mutual_information(state: GaussianModeState, nbar, eta):
    """S(in) + S(out) - S(exchange) of the mode, in bits."""
    lp, lm = state.spectrum()
    return mutual_information_from_spectrum(lp, lm, nbar, eta)


def mutual_information_from_spectrum(lam_plus, lam_minus, nbar, eta):
    lpp, lmp = _evolved_spectrum(lam_plus, lam_minus, nbar, eta)
    s_in = g_entropy(math.sqrt(lam_plus * lam_minus) - 0.5)
    s_out = g_entropy(math.sqrt(lpp * lmp) - 0.5)
    return s_in + s_out - exchange_entropy_from_spectrum(lam_plus, lam_minus, nbar, eta)


def coherent_information(state: GaussianModeState, nbar, eta):
    """Mutual information minus input entropy, in bits."""
    return mutual_information(state, nbar, eta) - input_entropy(state)


@dataclass(frozen=True)
class SqueezeScan:
    """Result of scanning mutual information over eigenvalue splittings at
    fixed mean photon number."""

    optimal_at_zero: bool
    argmax_diff: float
    diffs: np.ndarray
    mutual_bits: np.ndarray


def verify_no_squeezing(n, nbar, eta, grid_size=101) -> SqueezeScan:
    """Scan states with mean photon number n (m = 0) over the eigenvalue
    difference lam+ - lam- in [0, 2n] at fixed sum lam+ + lam- = 2n + 1,
    and report whether the mutual information peaks at zero difference
    (within one grid step)."""
    if n <= 0.0:
        raise ValueError("scan needs n > 0")
    total = 2.0 * n + 1.0
    diffs = np.linspace(0.0, 2.0 * n, int(grid_size))
    vals = np.array(
        [
            mutual_information_from_spectrum((total + d) / 2.0, (total - d) / 2.0, nbar, eta)
            for d in diffs
        ]
    )
    best = int(np.argmax(vals))
    return SqueezeScan(
        optimal_at_zero=best <= 1,
        argmax_diff=float(diffs[best]),
        diffs=diffs,
        mutual_bits=vals,
    )
