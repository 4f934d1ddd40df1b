"""Absolute rates in physical units.

Rates scale with the square root of the input power through
R_C = sqrt(pi P / (3 hbar)) / ln 2.  A thermal bath is characterized by the
ratio R_T/R_C, which equals 1 at the critical temperature separating the
regimes with and without a classical-rate cutoff.
"""

from broadband_capacity import (
    ChannelSpec,
    PhysicalInputs,
    capacity_report,
    critical_temperature,
    thermal_ratio,
)

power = 1e-12  # 1 pW
t_c = critical_temperature(power)
print(f"power = {power} W -> critical temperature T_c = {t_c:.4f} K")

for temp in (0.25 * t_c, 0.5 * t_c):
    inputs = PhysicalInputs(power, temp)
    rep = capacity_report(ChannelSpec.thermal(0.7, 0.0), inputs)
    print(f"\nbath T = {temp:.4f} K (rho_T = {thermal_ratio(inputs):.3f}), eta = 0.7:")
    print(f"  R_C = {rep.rc_bits_per_sec:.4e} bits/s")
    for name in ("ce", "c_lower", "q_lower"):
        print(f"  {name:<8} factor {getattr(rep, name + '_factor'):.4f} -> {rep.rates[name]:.4e} bits")

print("\nsquare-root power law (loss, eta=0.7):")
for p in (power, 4 * power):
    rep = capacity_report(ChannelSpec.loss(0.7), PhysicalInputs(p))
    print(f"  P = {p:.1e} W -> C_E rate {rep.rates['ce']:.6e} bits")
