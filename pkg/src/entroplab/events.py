"""
Photon absorption as a localization event.

Absorbing a photon collapses the center-of-mass state to a narrow Gaussian
at a Born-sampled site and transfers the photon momentum. The entropy
produced is k_B times the drop in position information entropy, which for
Gaussian before/after widths reduces to k_B * ln(sigma_before/sigma_after).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .analytic import GaussianPacket
from .grid import GridWavefunction, differential_entropy, from_gaussian, sample_position


class LocalizationError(ValueError):
    """The requested event would not reduce position entropy."""


class ResolutionError(ValueError):
    """Post-collapse width is too narrow for the grid to resolve."""


@dataclass(frozen=True)
class Photon:
    """Energy/momentum carrier with zero total information entropy.

    Momentum magnitude is tied to the energy by |p| = E/c; the sign encodes
    the propagation direction. Its sharp momentum and undefinable position
    cancel in the information ledger, so the photon contributes nothing.
    """

    energy: float
    momentum: float
    c: float = 1.0

    #: the photon's position/momentum entropies cancel exactly
    total_information_entropy: float = field(default=0.0, init=False)

    def __post_init__(self) -> None:
        if self.energy <= 0:
            raise ValueError(f"photon energy must be positive, got {self.energy}")
        if self.c <= 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if abs(abs(self.momentum) - self.energy / self.c) > 1e-12 * self.energy / self.c:
            raise ValueError(
                f"|momentum| must equal energy/c: got |{self.momentum}| "
                f"vs {self.energy / self.c}"
            )

    @classmethod
    def from_energy(cls, energy: float, direction: int = 1, c: float = 1.0) -> "Photon":
        if direction not in (1, -1):
            raise ValueError(f"direction must be +1 or -1, got {direction}")
        return cls(energy=energy, momentum=direction * energy / c, c=c)


def compton_sigma(photon: Photon, hbar: float = 1.0) -> float:
    """Heuristic post-collapse width hbar*c/(2*E): the resolution scale the
    photon energy can pin down. A convention of this package, not a derived
    quantity; event records carry the width actually used."""
    return hbar * photon.c / (2.0 * photon.energy)


@dataclass(frozen=True)
class AbsorptionEvent:
    """Committed localization record; delta_S > 0 by construction."""

    t1: float
    x1: float
    sigma_loc: float
    photon: Photon
    environment_temperature: float
    delta_S: float


def absorb(
    psi: GridWavefunction,
    mass: float,
    p0: float,
    photon: Photon,
    sigma_loc: float,
    t1: float,
    rng: np.random.Generator,
    k_B: float = 1.0,
    environment_temperature: float = 0.0,
) -> tuple[GridWavefunction, AbsorptionEvent]:
    """Annihilate the photon and localize psi at a Born-sampled site.

    psi must be the freely evolved position-space state at t1. The post
    state is an exact Gaussian of width sigma_loc centered at the sampled
    x1, with momentum mean p0 + photon.momentum. Returns the collapsed
    state and the committed event; raises LocalizationError when the event
    would not shrink the position entropy (delta_S <= 0 is a caller
    mistake, not a physical outcome of this model).
    """
    if sigma_loc <= 0:
        raise ValueError(f"sigma_loc must be positive, got {sigma_loc}")
    if sigma_loc < 4.0 * psi.dx:
        raise ResolutionError(
            f"sigma_loc={sigma_loc} is below 4*dx={4.0 * psi.dx}; refine the grid"
        )
    entropy_before = differential_entropy(psi)
    x1 = sample_position(psi, rng)
    packet = GaussianPacket(
        mu_x=x1,
        p0=p0 + photon.momentum,
        sigma0=sigma_loc,
        mass=mass,
        t=0.0,
        hbar=psi.hbar,
    )
    state_after = from_gaussian(packet, psi.x0, psi.dx, len(psi))
    delta_S = k_B * (entropy_before - differential_entropy(state_after))
    if delta_S <= 0:
        raise LocalizationError(
            f"delta_S={delta_S:.6g} <= 0: sigma_loc={sigma_loc} does not "
            "localize the state (post-collapse width is not narrower)"
        )
    event = AbsorptionEvent(
        t1=t1,
        x1=x1,
        sigma_loc=sigma_loc,
        photon=photon,
        environment_temperature=environment_temperature,
        delta_S=delta_S,
    )
    return state_after, event


def brillouin_check(
    photon: Photon,
    T0: float,
    k_B: float = 1.0,
    ratio_threshold: float = 10.0,
) -> dict:
    """Advisory check that the photon energy dominates the thermal scale.

    ok iff energy/(k_B*T0) >= ratio_threshold (boundary inclusive). Never
    blocks an absorption; callers decide what to do with a marginal photon.
    """
    if T0 <= 0:
        raise ValueError(f"T0 must be positive, got {T0}")
    ratio = photon.energy / (k_B * T0)
    return {"ok": ratio >= ratio_threshold, "ratio": ratio}
