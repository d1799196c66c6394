"""Free Gaussian dispersion: the position entropy grows, S does not.

A minimum-uncertainty packet spreads ballistically while its momentum
density stays frozen. The entropy ledger shows I_x climbing with sigma_x(t)
and the thermodynamic entropy S = k_B * I_p flat to rounding.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from entroplab import EntropyLedger, GaussianPacket, from_gaussian, propagate_schedule

packet = GaussianPacket(mu_x=0.0, p0=1.0, sigma0=1.0, mass=1.0)
psi = from_gaussian(packet, -48.0, 96.0 / 4096, 4096)

times = list(np.linspace(0.0, 6.0, 25))
ledger = EntropyLedger(run_id="free-dispersion", seed=0)
for t, snap in zip(times, propagate_schedule(psi, packet.mass, times)):
    ledger.record(t, snap)

print("  t      I_x        I_p        S       sigma_x (oracle)")
for t, e in zip(times, ledger.entries):
    oracle = GaussianPacket(sigma0=1.0, t=t).sigma_x
    print(f"{t:5.2f}  {e.I_x:+.6f}  {e.I_p:+.6f}  {e.S:+.6f}   {oracle:.4f}")

report = ledger.verify()
print(report.to_text())

fig, ax = plt.subplots()
ax.plot(times, [e.I_x for e in ledger.entries], label="$I_x(t)$")
ax.plot(times, [e.S for e in ledger.entries], label="$S(t)$")
ax.set_xlabel("t")
ax.set_ylabel("nats / $k_B$")
ax.legend()
ax.grid(alpha=0.3)
fig.savefig("free_dispersion.svg")
print("wrote free_dispersion.svg")
