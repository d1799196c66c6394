"""Exorcising both demons with the localization ledger.

Pressure demon: each particle that sneaks through the aperture is
implicitly localized from support L to support w, producing ln(L/w) of
entropy against the ln 2 of sorting information it yields -- never a net
win for w <= L/2. Temperature demon: knowing the momentum to sigma_p
spreads the position to hbar/(2*sigma_p), so the particle almost never
shows up at the opening at all.
"""

from entroplab import pressure_demon, temperature_demon

print("pressure demon, L=4, w=1, 10000 trials")
rep = pressure_demon(trials=10_000, box_width=4.0, aperture=1.0, seed=0)
t0 = rep.trial_records[0]
print(f"  per trial: info gain {t0.info_gain:.6f}, localization {t0.localization_entropy:.6f}")
print(f"  mean net production {rep.mean_net:.6f} k_B  ->  {'PASS' if rep.passed else 'FAIL'}")

print()
print("temperature demon, aperture w=1")
for sigma_p in (10.0, 0.1, 0.01, 0.001):
    rep = temperature_demon(sigma_p=sigma_p, aperture=1.0, samples=100_000, seed=0)
    d = rep.details
    print(
        f"  sigma_p={sigma_p:<7g} sigma_x={d['sigma_x']:<8g} "
        f"passage prob: analytic {d['passage_probability_analytic']:.3e} "
        f"vs MC {d['passage_probability_estimate']:.3e}  "
        f"{'PASS' if rep.passed else 'FAIL'}"
    )
