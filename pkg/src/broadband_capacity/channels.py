"""Channel and noise specifications for the broadband problem.

Four noise models share one beam-splitter coupling of quantum efficiency
``eta`` per frequency mode and differ only in the reservoir occupation
profile nbar(omega):

* loss        -- empty reservoir, nbar = 0 at every frequency;
* white       -- the same occupation ``nbar`` at every frequency;
* thermal     -- Bose-Einstein occupation 1/(e^(omega/omega_bar) - 1) with
  characteristic frequency omega_bar = K T / hbar set by the bath
  temperature;
* dephasing   -- nonlinear model with the reservoir occupation locked to
  the signal occupation of the same mode.

Frequencies are used in units of the water-filling scale Omega fixed by the
input power, so the thermal profile depends only on x/y0 with
x = omega/Omega and y0 = omega_bar/Omega.  Models without a characteristic
frequency take y0 = 0.  Thermal channels are parametrized internally by the
dimensionless temperature-to-power ratio rho_t = R_T/R_C; conversion from
kelvin and watts happens only at the interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

HBAR = 1.0545718e-34  # J s
KBOLTZ = 1.380649e-23  # J / K
PLANCK = 2.0 * math.pi * HBAR  # J s


class NoiseModel(str, Enum):
    LOSS = "loss"
    WHITE = "white"
    THERMAL = "thermal"
    DEPHASING = "dephasing"


def bose_occupation(t):
    """1/(e^t - 1) for t > 0, with underflow-safe tails."""
    if t <= 0.0:
        raise ValueError(f"bose_occupation needs t > 0, got {t}")
    if t > 709.0:  # e^t overflows; occupation is below 1e-308 anyway
        return 0.0
    return 1.0 / math.expm1(t)


@dataclass(frozen=True)
class ChannelSpec:
    """Noise model, quantum efficiency and noise parameters of a channel.

    ``nbar`` is the flat reservoir occupation (white noise only);
    ``rho_t`` is the thermal ratio R_T/R_C (thermal only).  Construction
    normalizes the parameters that the model does not use.
    """

    model: NoiseModel
    eta: float
    nbar: float = 0.0
    rho_t: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "model", NoiseModel(self.model))
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"quantum efficiency must be in [0, 1], got {self.eta}")
        if self.nbar < 0.0:
            raise ValueError(f"nbar must be >= 0, got {self.nbar}")
        if self.rho_t < 0.0:
            raise ValueError(f"rho_t must be >= 0, got {self.rho_t}")
        if self.model is not NoiseModel.THERMAL and self.rho_t != 0.0:
            raise ValueError(f"rho_t is meaningful only for thermal channels ({self.model.value})")
        if self.model is not NoiseModel.WHITE and self.model is not NoiseModel.THERMAL:
            if self.nbar != 0.0:
                raise ValueError(f"nbar is meaningful only for white noise ({self.model.value})")
        if self.model is NoiseModel.THERMAL:
            # the thermal profile has unit characteristic occupation
            object.__setattr__(self, "nbar", 1.0)

    @property
    def has_char_freq(self):
        """True when the noise owns a characteristic frequency (thermal)."""
        return self.model is NoiseModel.THERMAL

    @classmethod
    def loss(cls, eta):
        return cls(NoiseModel.LOSS, eta)

    @classmethod
    def white(cls, eta, nbar):
        return cls(NoiseModel.WHITE, eta, nbar=nbar)

    @classmethod
    def thermal(cls, eta, rho_t):
        return cls(NoiseModel.THERMAL, eta, rho_t=rho_t)

    @classmethod
    def dephasing(cls, eta):
        return cls(NoiseModel.DEPHASING, eta)


def nbar_at(spec: ChannelSpec, x, y0=0.0, signal_n=None):
    """Reservoir occupation seen by the mode at scaled frequency x.

    Thermal channels need the scaled characteristic frequency y0 > 0
    (y0 = 0 is accepted as the zero-temperature limit and gives 0).
    Dephasing channels return the signal occupation ``signal_n``.
    """
    if x <= 0.0:
        raise ValueError(f"scaled frequency must be > 0, got {x}")
    model = spec.model
    if model is NoiseModel.LOSS:
        return 0.0
    if model is NoiseModel.WHITE:
        return spec.nbar
    if model is NoiseModel.THERMAL:
        if y0 < 0.0:
            raise ValueError(f"thermal channel needs y0 >= 0, got {y0}")
        if y0 == 0.0:
            return 0.0
        return bose_occupation(x / y0)
    if signal_n is None:
        raise ValueError("dephasing noise tracks the signal: pass signal_n")
    return signal_n


@dataclass(frozen=True)
class PhysicalInputs:
    """Input power (W), optional bath temperature (K) and transmission
    time (s)."""

    power: float
    temperature: float | None = None
    transmission_time: float = 1.0

    def __post_init__(self):
        if self.power <= 0.0:
            raise ValueError(f"power must be > 0, got {self.power}")
        if self.temperature is not None and self.temperature < 0.0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")
        if self.transmission_time <= 0.0:
            raise ValueError(f"transmission time must be > 0, got {self.transmission_time}")


def classical_rate(power):
    """Noiseless classical rate R_C = sqrt(pi P / (3 hbar)) / ln2 in bits/s."""
    if power <= 0.0:
        raise ValueError(f"power must be > 0, got {power}")
    return math.sqrt(math.pi * power / (3.0 * HBAR)) / math.log(2.0)


def thermal_rate(temperature):
    """Thermal rate R_T = (pi^2 / (3 ln2)) K T / h in bits/s."""
    if temperature < 0.0:
        raise ValueError(f"temperature must be >= 0, got {temperature}")
    return (math.pi**2 / (3.0 * math.log(2.0))) * KBOLTZ * temperature / PLANCK


def thermal_ratio(inputs: PhysicalInputs):
    """Dimensionless ratio rho_t = R_T/R_C of the thermal and noiseless
    classical rates.  Linear in T; equals 1 at the critical temperature."""
    t = inputs.temperature if inputs.temperature is not None else 0.0
    return thermal_rate(t) / classical_rate(inputs.power)


def critical_temperature(power):
    """Temperature at which R_T = R_C, i.e. rho_t = 1: the boundary between
    the low- and high-temperature regimes of the thermal channel."""
    return classical_rate(power) / (math.pi**2 / (3.0 * math.log(2.0)) * KBOLTZ / PLANCK)
