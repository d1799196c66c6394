"""
Free-particle propagation of grid states.

The propagator is spectral: multiply the momentum representation by
exp(-i p^2 dt / (2 m hbar)) and transform back. For a free particle this is
exact up to grid truncation, so the momentum density (and with it the
thermodynamic entropy) is conserved to rounding.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .grid import (
    BOUNDARY_TOL,
    GridOverflowError,
    GridWavefunction,
    to_momentum,
    to_position,
)


def free_propagate(
    psi: GridWavefunction, mass: float, dt: float
) -> GridWavefunction:
    """Evolve a position-space state freely by dt >= 0.

    Raises GridOverflowError if the spread state reaches the grid boundary;
    periodic wraparound would silently corrupt every entropy downstream.
    """
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    if dt < 0:
        raise ValueError(f"dt must be non-negative, got {dt}")
    phi = to_momentum(psi)
    p = phi.coords
    phase = np.exp(-1j * p**2 * dt / (2.0 * mass * psi.hbar))
    out = to_position(
        GridWavefunction(phi.samples * phase, phi.x0, phi.dx, phi.hbar, "momentum"),
        psi.x0,
    )
    if out.boundary_mass >= BOUNDARY_TOL:
        raise GridOverflowError(
            f"state reached the grid boundary after dt={dt} "
            f"(boundary mass {out.boundary_mass:.3e}); use a wider grid"
        )
    return out


def propagate_schedule(
    psi: GridWavefunction, mass: float, times: Sequence[float]
) -> list[GridWavefunction]:
    """Snapshots of the free evolution at each time in an ascending schedule.

    Steps are composed, so snapshot k is reached by propagating snapshot k-1
    by times[k] - times[k-1]; composition agrees with a single step to
    rounding.
    """
    times = list(times)
    if not times:
        raise ValueError("schedule must contain at least one time")
    if times[0] < 0:
        raise ValueError(f"schedule must start at t >= 0, got {times[0]}")
    if any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError(f"schedule must be strictly ascending, got {times}")
    snapshots = []
    state = psi
    prev = 0.0
    for t in times:
        state = free_propagate(state, mass, t - prev) if t > prev else state
        snapshots.append(state)
        prev = t
    return snapshots
