"""
Closed-form results for free 1-D Gaussian wave packets.

A minimum-uncertainty Gaussian stays Gaussian under free evolution; its
position spread grows as

    sigma_x(t) = sigma0 * sqrt(1 + (hbar*t / (2*m*sigma0^2))^2)

while the momentum density is frozen with sigma_p = hbar/(2*sigma0).
Everything here is exact, so these functions serve as the oracle against
which the grid-based numerics are checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


def leipnik_bound(hbar: float = 1.0) -> float:
    """Lower bound ln(pi*e*hbar) on the sum of position and momentum
    differential entropies of conjugate densities; Gaussians saturate it."""
    if hbar <= 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    return 1.0 + math.log(math.pi * hbar)


def gaussian_entropy(sigma: float) -> float:
    """Differential entropy (nats) of a normal density with std. dev. sigma.

    Equals ln(sqrt(2*pi)*sigma) + 1/2; negative for narrow densities.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    return math.log(math.sqrt(2.0 * math.pi) * sigma) + 0.5


@dataclass(frozen=True)
class GaussianPacket:
    """Free minimum-uncertainty wave packet, tracked analytically.

    Parameters
    ----------
    mu_x : float
        Current mean position (already includes ballistic drift).
    p0 : float
        Mean momentum.
    sigma0 : float
        Position std. dev. at t = 0.
    mass : float
        Particle mass.
    t : float
        Elapsed free-evolution time.
    hbar : float
        Reduced Planck constant of the unit system.
    """

    mu_x: float = 0.0
    p0: float = 0.0
    sigma0: float = 1.0
    mass: float = 1.0
    t: float = 0.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if self.sigma0 <= 0:
            raise ValueError(f"sigma0 must be positive, got {self.sigma0}")
        if self.mass <= 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.hbar <= 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if self.t < 0:
            raise ValueError(f"t must be non-negative, got {self.t}")

    @property
    def spreading_factor(self) -> float:
        """Dimensionless ratio hbar*t / (2*m*sigma0^2)."""
        return self.hbar * self.t / (2.0 * self.mass * self.sigma0**2)

    @property
    def sigma_x(self) -> float:
        """Position std. dev. at the current time."""
        return self.sigma0 * math.sqrt(1.0 + self.spreading_factor**2)

    @property
    def sigma_p(self) -> float:
        """Momentum std. dev., independent of time."""
        return self.hbar / (2.0 * self.sigma0)

    @property
    def mu_p(self) -> float:
        return self.p0


def entropy_position(packet: GaussianPacket) -> float:
    """Position-space differential entropy, strictly increasing in t."""
    return gaussian_entropy(packet.sigma_x)


def entropy_momentum(packet: GaussianPacket) -> float:
    """Momentum-space differential entropy; constant under free evolution."""
    return gaussian_entropy(packet.sigma_p)


def heisenberg_product(packet: GaussianPacket) -> float:
    """sigma_x * sigma_p; >= hbar/2 always, equality exactly at t = 0."""
    return packet.sigma_x * packet.sigma_p


def evolve(packet: GaussianPacket, dt: float) -> GaussianPacket:
    """Advance a packet by dt >= 0 of free evolution.

    The mean drifts ballistically, mu_x += (p0/m)*dt; widths follow the
    spreading law through the updated t. Negative dt is rejected: time
    reversal needs psi -> psi*, which this closed-form record cannot express.
    """
    if dt < 0:
        raise ValueError(f"dt must be non-negative, got {dt}")
    return replace(
        packet,
        mu_x=packet.mu_x + (packet.p0 / packet.mass) * dt,
        t=packet.t + dt,
    )
