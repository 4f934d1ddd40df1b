"""Broadband bosonic channel capacities under an input-power constraint.

Entanglement-assisted capacity and lower bounds on the classical and
quantum capacities for lossy, white-noise, thermal and dephasing channels,
via closed-form single-mode kernels and water-filling over frequency.
"""

from .channels import (
    HBAR,
    KBOLTZ,
    PLANCK,
    ChannelSpec,
    NoiseModel,
    PhysicalInputs,
    bose_occupation,
    classical_rate,
    critical_temperature,
    nbar_at,
    thermal_ratio,
)
from .kernels import (
    KernelEval,
    ModeParams,
    Quantity,
    a_factor,
    d_factor,
    evaluate_kernel,
    g_entropy,
    kernel_ce,
    kernel_ce_dephasing,
    kernel_dephasing,
    kernel_k,
    kernel_k_dephasing,
    kernel_q,
    kernel_q_dephasing,
    output_photons,
)
from .oracle import (
    ExchangeEigenvalues,
    GaussianModeState,
    SpectralPair,
    SqueezeScan,
    spectral_pair,
    coherent_information,
    exchange_entropy,
    exchange_spectrum,
    input_entropy,
    make_state,
    mutual_information,
    output_entropy,
    state_from_spectrum,
    thermal_state,
    verify_no_squeezing,
)
from .special import bose_entropy_integral, gamma_fn, lambda_fn
from .spectrum import (
    ModeSolveRequest,
    OccupationPoint,
    analytic_occupation_k,
    mode_occupation,
    occupation_solver,
    stationarity_residual,
    thermal_highT_params,
    white_cutoff,
)
from .broadband import (
    CapacityReport,
    SpectrumSolution,
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

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
