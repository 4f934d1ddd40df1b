"""Optimal photon allocation over frequency (water-filling with cutoffs).

The power constraint turns into a per-frequency penalized maximization.
For the classical quantity on a lossy channel the solution is a pure Bose
profile; white noise introduces a cutoff above which sending photons is
wasted; thermal noise pushes the quantum quantity to zero at BOTH ends
(low frequencies are noise-dominated, high frequencies energy-dominated).
"""

import numpy as np

from broadband_capacity import ChannelSpec, Quantity, occupation_solver, solve_y0, white_cutoff

xs = np.linspace(0.1, 3.0, 13)

loss = occupation_solver(Quantity.C_LOWER, ChannelSpec.loss(0.5))
white_spec = ChannelSpec.white(0.5, 1.0)
white = occupation_solver(Quantity.C_LOWER, white_spec)
thermal_spec = ChannelSpec.thermal(0.8, 0.41)
y0 = solve_y0(Quantity.Q_LOWER, thermal_spec)
thermal_q = occupation_solver(Quantity.Q_LOWER, thermal_spec, y0)

print(f"white-noise cutoff at x = {white_cutoff(white_spec):.4f}; thermal y0 = {y0:.4f}")
print(f"{'x':>5} {'loss C':>10} {'white C':>10} {'thermal Q':>10}")
for x in xs:
    row = [solver(float(x)) for solver in (loss, white, thermal_q)]
    cells = " ".join(f"{pt.n:>10.4f}" if not pt.clamped else f"{'--':>10}" for pt in row)
    print(f"{x:>5.2f} {cells}")
print("('--' marks clamped modes: sending nothing is optimal there)")
