"""Unit-system constants threaded through a run.

Internally everything runs in natural units hbar = k_B = c = 1, where the
entropic bound is the clean constant ln(pi*e) = 1 + ln(pi). Other values
are only a reporting concern.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class UnitSystem:
    hbar: float = 1.0
    k_B: float = 1.0
    c: float = 1.0

    def __post_init__(self) -> None:
        for name in ("hbar", "k_B", "c"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")


NATURAL = UnitSystem()
