"""
entroplab: a numerical laboratory for entropy production in localization.

1-D Gaussian wave packets evolve freely, photon absorptions collapse them
to narrow Gaussians at Born-sampled sites, and an entropy ledger audits
the entropic and Heisenberg uncertainty relations plus second-law
bookkeeping along the way. Companion scenarios cover the one-bit Landauer
box and the temperature/pressure Maxwell demons.
"""

from .analytic import (
    GaussianPacket,
    entropy_momentum,
    entropy_position,
    evolve,
    gaussian_entropy,
    heisenberg_product,
    leipnik_bound,
)
from .events import AbsorptionEvent, Photon, absorb, brillouin_check, compton_sigma
from .evolution import free_propagate, propagate_schedule
from .grid import (
    GridWavefunction,
    differential_entropy,
    from_gaussian,
    make_rng,
    moments,
    normalize,
    sample_position,
    split_seed,
    to_momentum,
    to_position,
)
from .ledger import EntropyLedger, LedgerEntry, VerificationReport, verify
from .scenarios import (
    DemonReport,
    LandauerOutcome,
    landauer_box,
    pressure_demon,
    temperature_demon,
)
from .units import NATURAL, UnitSystem

__version__ = "0.1.0"

__all__ = [
    "GaussianPacket",
    "entropy_momentum",
    "entropy_position",
    "evolve",
    "gaussian_entropy",
    "heisenberg_product",
    "leipnik_bound",
    "AbsorptionEvent",
    "Photon",
    "absorb",
    "brillouin_check",
    "compton_sigma",
    "free_propagate",
    "propagate_schedule",
    "GridWavefunction",
    "differential_entropy",
    "from_gaussian",
    "make_rng",
    "moments",
    "normalize",
    "sample_position",
    "split_seed",
    "to_momentum",
    "to_position",
    "EntropyLedger",
    "LedgerEntry",
    "VerificationReport",
    "verify",
    "DemonReport",
    "LandauerOutcome",
    "landauer_box",
    "pressure_demon",
    "temperature_demon",
    "NATURAL",
    "UnitSystem",
]
