"""
Executable versions of the two classic thought experiments.

The one-bit piston box separates information-entropy bookkeeping from
thermodynamic work in four epistemic/ontic modes, and the two demon toys
show how the localization cost at an aperture pays for any sorting. Both
use closed forms: the point of each scenario is an exact inequality, not a
dynamics simulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .grid import split_seed

LANDAUER_MODES = (
    "ontic-reset",
    "epistemic-left",
    "epistemic-right",
    "measured-with-sensor",
)


@dataclass(frozen=True)
class LandauerOutcome:
    mode: str
    work: float  # in units of k_B*T
    entropy_produced: float  # in units of k_B
    info_entropy_before: float  # nats
    info_entropy_after: float  # nats


def landauer_box(
    mode: str, T: float, epsilon: Optional[float] = None
) -> LandauerOutcome:
    """One-bit particle-in-a-box reset/measurement, by quasi-static algebra.

    In every mode the Shannon entropy of the bit drops by ln 2. Only the
    ontic reset, where the piston compresses a genuinely indefinite state,
    pays the full k_B*T*ln 2; if the particle already has a definite side
    the piston does no thermodynamic work, and a sensor-stopped measurement
    costs an arbitrarily small epsilon.
    """
    if mode not in LANDAUER_MODES:
        raise ValueError(f"unknown mode {mode!r}; choose from {LANDAUER_MODES}")
    if T <= 0:
        raise ValueError(f"T must be positive, got {T}")
    if mode == "ontic-reset":
        entropy = math.log(2.0)
    elif mode == "measured-with-sensor":
        if epsilon is None or epsilon <= 0:
            raise ValueError(
                "measured-with-sensor mode needs a positive epsilon"
            )
        entropy = epsilon
    else:
        entropy = 0.0
    return LandauerOutcome(
        mode=mode,
        work=entropy * T,
        entropy_produced=entropy,
        info_entropy_before=math.log(2.0),
        info_entropy_after=0.0,
    )


@dataclass(frozen=True)
class DemonTrial:
    info_gain: float  # nats
    localization_entropy: float  # k_B units
    net: float  # k_B units
    passage_x: float  # where the particle crossed the aperture


@dataclass
class DemonReport:
    variant: str
    trials: int
    trial_records: list[DemonTrial] = field(default_factory=list)
    mean_net: float = 0.0
    passed: bool = False
    details: dict = field(default_factory=dict)


def pressure_demon(
    trials: int, box_width: float, aperture: float, seed: int = 0
) -> DemonReport:
    """Unidirectional-valve sorting with the localization cost booked.

    A particle uniform over the box (position entropy ln L) passes an
    opening of width w: the sorting gains one bit (ln 2) but the implicit
    localization from support L to support w produces ln(L/w). For
    w <= L/2 every trial has non-negative net production, zero exactly at
    w = L/2.
    """
    if trials <= 0:
        raise ValueError(f"trials must be positive, got {trials}")
    if box_width <= 0:
        raise ValueError(f"box_width must be positive, got {box_width}")
    if not 0 < aperture <= box_width / 2.0:
        raise ValueError(
            f"aperture must satisfy 0 < w <= L/2, got w={aperture}, L={box_width}"
        )
    localization = math.log(box_width / aperture)
    info_gain = math.log(2.0)
    records = []
    for trial in range(trials):
        rng = split_seed(seed, trial)
        # crossing point within the aperture; the ledger arithmetic is
        # closed-form, the draw just fixes the trial's microscopic record
        passage_x = float(rng.uniform(0.0, aperture))
        records.append(
            DemonTrial(
                info_gain=info_gain,
                localization_entropy=localization,
                net=localization - info_gain,
                passage_x=passage_x,
            )
        )
    mean_net = sum(r.net for r in records) / trials
    passed = mean_net >= 0.0 and all(r.net >= -1e-9 for r in records)
    return DemonReport(
        variant="pressure",
        trials=trials,
        trial_records=records,
        mean_net=mean_net,
        passed=passed,
        details={
            "box_width": box_width,
            "aperture": aperture,
            "seed": seed,
            "per_trial_net": localization - info_gain,
        },
    )


def _gaussian_aperture_probability(sigma_x: float, aperture: float) -> float:
    """Mass of N(0, sigma_x) inside a centered aperture of width w."""
    return math.erf(aperture / (2.0 * math.sqrt(2.0) * sigma_x))


def temperature_demon(
    sigma_p: float,
    aperture: float,
    hbar: float = 1.0,
    samples: int = 100_000,
    seed: int = 0,
) -> DemonReport:
    """Velocity-sorting demon defeated by the uncertainty relation.

    Knowing the momentum to sigma_p forces a position spread of at least
    hbar/(2*sigma_p), so the chance that the particle is even at the
    centered aperture shrinks as the momentum knowledge sharpens. The
    Monte-Carlo passage estimate must match the Gaussian integral within
    four estimator sigma.
    """
    if sigma_p <= 0 or aperture <= 0:
        raise ValueError("sigma_p and aperture must be positive")
    if samples <= 0:
        raise ValueError(f"samples must be positive, got {samples}")
    sigma_x = hbar / (2.0 * sigma_p)
    p_analytic = _gaussian_aperture_probability(sigma_x, aperture)
    rng = split_seed(seed, 0)
    draws = rng.normal(0.0, sigma_x, size=samples)
    p_estimate = float((abs(draws) <= aperture / 2.0).mean())
    stderr = math.sqrt(max(p_analytic * (1.0 - p_analytic), 1e-300) / samples)
    tolerance = 4.0 * stderr
    passed = abs(p_estimate - p_analytic) <= max(tolerance, 1.0 / samples)
    # sharper momentum knowledge must monotonically suppress passage
    sweep = [
        (sigma_p / 2.0**k, _gaussian_aperture_probability(hbar / (sigma_p / 2.0**k) / 2.0, aperture))
        for k in range(4)
    ]
    return DemonReport(
        variant="temperature",
        trials=samples,
        trial_records=[],
        mean_net=0.0,
        passed=passed,
        details={
            "sigma_p": sigma_p,
            "sigma_x": sigma_x,
            "aperture": aperture,
            "seed": seed,
            "passage_probability_estimate": p_estimate,
            "passage_probability_analytic": p_analytic,
            "estimator_tolerance": tolerance,
            "probability_vs_sigma_p": sweep,
        },
    )
