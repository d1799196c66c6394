import math

import numpy as np
import pytest

from entroplab.analytic import GaussianPacket, evolve
from entroplab.evolution import free_propagate, propagate_schedule
from entroplab.grid import (
    GridOverflowError,
    GridWavefunction,
    differential_entropy,
    from_gaussian,
    moments,
    to_momentum,
)


def packet_on_grid(sigma0=1.0, p0=0.0, x0=-32.0, n=2048):
    return from_gaussian(
        GaussianPacket(sigma0=sigma0, p0=p0), x0, 2 * abs(x0) / n, n
    )


class TestFreePropagate:
    def test_dt_zero_identity(self):
        psi = packet_on_grid()
        out = free_propagate(psi, 1.0, 0.0)
        assert np.abs(out.samples - psi.samples).max() < 1e-12

    def test_spreading_matches_oracle(self):
        psi = free_propagate(packet_on_grid(), 1.0, 2.0)
        assert moments(psi).std_dev == pytest.approx(math.sqrt(2.0), abs=1e-5)

    def test_momentum_entropy_invariant(self):
        psi = packet_on_grid()
        before = differential_entropy(to_momentum(psi))
        after = differential_entropy(to_momentum(free_propagate(psi, 1.0, 1.0)))
        assert after == pytest.approx(before, abs=1e-8)

    def test_momentum_density_pointwise_invariant(self):
        psi = packet_on_grid(p0=1.0)
        mod0 = np.abs(to_momentum(psi).samples)
        mod1 = np.abs(to_momentum(free_propagate(psi, 1.0, 3.0)).samples)
        assert np.abs(mod1 - mod0).max() < 1e-12

    def test_norm_drift_over_many_steps(self):
        psi = packet_on_grid(x0=-64.0, n=4096)
        for _ in range(1000):
            psi = free_propagate(psi, 1.0, 0.002)
        assert abs(psi.norm - 1.0) < 1e-10

    def test_grid_overflow_is_an_error(self):
        psi = packet_on_grid(x0=-8.0, n=512)
        with pytest.raises(GridOverflowError, match="dt="):
            free_propagate(psi, 1.0, 200.0)

    def test_negative_dt_rejected(self):
        with pytest.raises(ValueError):
            free_propagate(packet_on_grid(), 1.0, -1.0)

    def test_time_reversal_by_conjugation(self):
        # conjugating and propagating by dt recovers the conjugate of the
        # earlier state
        psi0 = packet_on_grid(p0=0.5)
        dt = 1.5
        psi1 = free_propagate(psi0, 1.0, dt)
        reversed_ = free_propagate(
            GridWavefunction(np.conj(psi1.samples), psi1.x0, psi1.dx), 1.0, dt
        )
        assert np.abs(reversed_.samples - np.conj(psi0.samples)).max() < 1e-9


class TestSchedule:
    def test_single_time_zero(self):
        psi = packet_on_grid()
        snaps = propagate_schedule(psi, 1.0, [0.0])
        assert len(snaps) == 1
        assert np.abs(snaps[0].samples - psi.samples).max() == 0.0

    def test_semigroup_composition(self):
        psi = packet_on_grid()
        composed = propagate_schedule(psi, 1.0, [1.0, 2.0])[-1]
        direct = free_propagate(psi, 1.0, 2.0)
        assert np.abs(composed.samples - direct.samples).max() < 1e-9

    def test_entropy_monotone_along_schedule(self):
        psi = packet_on_grid()
        times = list(np.linspace(0.0, 3.0, 10))
        entropies = [
            differential_entropy(s) for s in propagate_schedule(psi, 1.0, times)
        ]
        assert np.all(np.diff(entropies) > 0)

    def test_sigma_tracks_oracle_along_schedule(self):
        psi = packet_on_grid()
        times = [0.5, 1.5, 3.0]
        for t, snap in zip(times, propagate_schedule(psi, 1.0, times)):
            oracle = evolve(GaussianPacket(sigma0=1.0), t).sigma_x
            assert moments(snap).std_dev == pytest.approx(oracle, rel=1e-5)

    def test_rejects_bad_schedules(self):
        psi = packet_on_grid()
        with pytest.raises(ValueError):
            propagate_schedule(psi, 1.0, [])
        with pytest.raises(ValueError):
            propagate_schedule(psi, 1.0, [1.0, 1.0])
        with pytest.raises(ValueError):
            propagate_schedule(psi, 1.0, [2.0, 1.0])
        with pytest.raises(ValueError):
            propagate_schedule(psi, 1.0, [-1.0, 1.0])
