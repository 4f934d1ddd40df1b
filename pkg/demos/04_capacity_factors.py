"""Capacity factors of the four noise models.

Factors multiply T * R_C.  The lossy classical factor has the closed form
sqrt(eta), reproduced here by the numeric pipeline; the assisted factor
reaches 2 at eta = 1 (prior entanglement doubles the noiseless capacity)
and the quantum bounds switch on only above eta = 1/2.
"""

from broadband_capacity import ChannelSpec, Quantity, analytic_K, capacity_factor

print("lossy channel: numeric factor vs closed form sqrt(eta)")
for eta in (0.25, 0.5, 0.81, 1.0):
    spec = ChannelSpec.loss(eta)
    num = capacity_factor(Quantity.C_LOWER, spec).factor
    print(f"  eta={eta:>4}: numeric {num:.8f}   sqrt(eta) {analytic_K(spec):.8f}")

print("\nall factors at eta = 0.8:")
specs = {
    "loss": ChannelSpec.loss(0.8),
    "white nbar=1": ChannelSpec.white(0.8, 1.0),
    "thermal rho=0.41": ChannelSpec.thermal(0.8, 0.41),
    "dephasing": ChannelSpec.dephasing(0.8),
}
print(f"{'model':<18} {'C_E':>8} {'C lower':>9} {'Q lower':>9}")
for name, spec in specs.items():
    ce = capacity_factor(Quantity.CE, spec).factor
    k = capacity_factor(Quantity.C_LOWER, spec).factor
    q = capacity_factor(Quantity.Q_LOWER, spec).factor
    print(f"{name:<18} {ce:>8.4f} {k:>9.4f} {q:>9.4f}")
