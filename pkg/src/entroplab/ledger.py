"""
Entropy bookkeeping and inequality auditing.

A ledger is a time-ordered record of (t, I_x, I_p, S) with event tags.
Recording an entry computes both conjugate entropies, the thermodynamic
entropy S = k_B * I_p, the entropic-bound sum and the Heisenberg product.
verify() audits the whole run: the entropic lower bound per entry, the
Heisenberg inequality per entry, positive entropy production at events,
and constancy of S between events.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .analytic import leipnik_bound
from .events import AbsorptionEvent
from .grid import GridWavefunction, differential_entropy, moments, to_momentum
from .units import UnitSystem

# audit tolerances, fixed here and echoed in every report header
INFO_TOL = 1e-6
HEISENBERG_TOL = 1e-9
CONSTANCY_TOL = 1e-8

CSV_HEADER = "t,I_x,I_p,S,leipnik_sum,leipnik_bound,heisenberg_product,event"

EVENT_TAGS = ("none", "absorption", "scenario-step")


def fmt(value: float) -> str:
    """Serialize with 9 significant digits, the package-wide CSV format."""
    return f"{value:.9g}"


@dataclass(frozen=True)
class LedgerEntry:
    t: float
    I_x: float
    I_p: float
    S: float
    leipnik_sum: float
    leipnik_bound: float
    heisenberg_product: float
    event_tag: str = "none"
    event: Optional[AbsorptionEvent] = None

    def __post_init__(self) -> None:
        if self.event_tag not in EVENT_TAGS:
            raise ValueError(f"unknown event tag {self.event_tag!r}")


@dataclass
class EntropyLedger:
    units: UnitSystem = field(default_factory=UnitSystem)
    run_id: str = "run"
    seed: int = 0
    entries: list[LedgerEntry] = field(default_factory=list)

    def record(
        self,
        t: float,
        psi: GridWavefunction,
        event_tag: str = "none",
        event: Optional[AbsorptionEvent] = None,
    ) -> LedgerEntry:
        """Compute and append the entropy snapshot of psi at time t.

        psi must be a normalized position-space state; t must exceed the
        last recorded time.
        """
        if psi.space != "position":
            raise ValueError("ledger records position-space states")
        if self.entries and t <= self.entries[-1].t:
            raise ValueError(
                f"time regression: t={t} after t={self.entries[-1].t}"
            )
        phi = to_momentum(psi)
        i_x = differential_entropy(psi)
        i_p = differential_entropy(phi)
        mx = moments(psi)
        mp = moments(phi)
        entry = LedgerEntry(
            t=t,
            I_x=i_x,
            I_p=i_p,
            S=self.units.k_B * i_p,
            leipnik_sum=i_x + i_p,
            leipnik_bound=leipnik_bound(self.units.hbar),
            heisenberg_product=mx.std_dev * mp.std_dev,
            event_tag=event_tag,
            event=event,
        )
        self.entries.append(entry)
        return entry

    def delta_S(self, i: int, j: int) -> float:
        """Thermodynamic entropy difference k_B*(I_p[j] - I_p[i]), j >= i."""
        if j < i:
            raise ValueError(f"entry order violated: j={j} < i={i}")
        return self.units.k_B * (self.entries[j].I_p - self.entries[i].I_p)

    def verify(self) -> "VerificationReport":
        return verify(self)

    # -- serialization -------------------------------------------------

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for e in self.entries:
            tag = "" if e.event_tag == "none" else e.event_tag
            lines.append(
                ",".join(
                    [
                        fmt(e.t),
                        fmt(e.I_x),
                        fmt(e.I_p),
                        fmt(e.S),
                        fmt(e.leipnik_sum),
                        fmt(e.leipnik_bound),
                        fmt(e.heisenberg_product),
                        tag,
                    ]
                )
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Violation:
    name: str
    index: int
    detail: str


@dataclass
class VerificationReport:
    """Audit result; failures are content, never exceptions."""

    run_id: str
    seed: int
    units: UnitSystem
    entry_count: int
    leipnik_slacks: list[float]
    heisenberg_slacks: list[float]
    event_deltas: list[tuple[int, float]]
    cumulative_delta_S: float
    violations: list[Violation]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "seed": self.seed,
            "units": {
                "hbar": self.units.hbar,
                "k_B": self.units.k_B,
                "c": self.units.c,
            },
            "tolerances": {
                "information": INFO_TOL,
                "heisenberg": HEISENBERG_TOL,
                "constancy": CONSTANCY_TOL,
            },
            "entry_count": self.entry_count,
            "leipnik_slacks": self.leipnik_slacks,
            "heisenberg_slacks": self.heisenberg_slacks,
            "event_deltas": [
                {"index": i, "delta_S": d} for i, d in self.event_deltas
            ],
            "cumulative_delta_S": self.cumulative_delta_S,
            "violations": [
                {"name": v.name, "index": v.index, "detail": v.detail}
                for v in self.violations
            ],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        out = io.StringIO()
        out.write(f"run_id: {self.run_id}\n")
        out.write(f"seed: {self.seed}\n")
        out.write(
            f"units: hbar={fmt(self.units.hbar)} k_B={fmt(self.units.k_B)} "
            f"c={fmt(self.units.c)}\n"
        )
        out.write(
            f"tolerances: information={INFO_TOL:g} heisenberg={HEISENBERG_TOL:g} "
            f"constancy={CONSTANCY_TOL:g}\n"
        )
        out.write(f"entries: {self.entry_count}\n")
        out.write(f"cumulative_delta_S: {fmt(self.cumulative_delta_S)}\n")
        out.write("index  leipnik_slack  heisenberg_slack\n")
        for i, (ls, hs) in enumerate(
            zip(self.leipnik_slacks, self.heisenberg_slacks)
        ):
            out.write(f"{i:5d}  {fmt(ls):>13s}  {fmt(hs):>16s}\n")
        if self.event_deltas:
            out.write("events:\n")
            for i, d in self.event_deltas:
                out.write(f"  entry {i}: delta_S = {fmt(d)}\n")
        if self.violations:
            out.write("violations:\n")
            for v in self.violations:
                out.write(f"  [{v.name}] entry {v.index}: {v.detail}\n")
        out.write(f"result: {'PASS' if self.passed else 'FAIL'}\n")
        return out.getvalue()


def verify(ledger: EntropyLedger) -> VerificationReport:
    """Audit a ledger against every inequality the model asserts.

    Checks per entry: leipnik_sum >= bound - 1e-6 and sigma_x*sigma_p >=
    hbar/2 - 1e-9. Checks per step: S constant within 1e-8 between events,
    strictly increasing across an absorption.
    """
    if not ledger.entries:
        raise ValueError("cannot verify an empty ledger")
    bound = leipnik_bound(ledger.units.hbar)
    violations: list[Violation] = []
    leipnik_slacks = []
    heisenberg_slacks = []
    event_deltas = []
    for i, e in enumerate(ledger.entries):
        ls = e.leipnik_sum - bound
        hs = e.heisenberg_product - 0.5 * ledger.units.hbar
        leipnik_slacks.append(ls)
        heisenberg_slacks.append(hs)
        if ls < -INFO_TOL:
            violations.append(
                Violation("leipnik", i, f"I_x + I_p below bound by {-ls:.3e}")
            )
        if hs < -HEISENBERG_TOL:
            violations.append(
                Violation(
                    "heisenberg", i, f"sigma_x*sigma_p below hbar/2 by {-hs:.3e}"
                )
            )
        if abs(e.S - ledger.units.k_B * e.I_p) > 0.0:
            violations.append(
                Violation("thermo-identity", i, "S != k_B * I_p as stored")
            )
    for i in range(1, len(ledger.entries)):
        prev, cur = ledger.entries[i - 1], ledger.entries[i]
        dS = cur.S - prev.S
        if cur.event_tag == "absorption":
            event_deltas.append((i, dS))
            if dS <= 0:
                violations.append(
                    Violation(
                        "event-entropy",
                        i,
                        f"absorption produced delta_S={dS:.6g} <= 0",
                    )
                )
        elif dS < -CONSTANCY_TOL:
            violations.append(
                Violation("second-law", i, f"S decreased by {-dS:.6g}")
            )
        elif dS > CONSTANCY_TOL:
            violations.append(
                Violation(
                    "free-evolution-drift",
                    i,
                    f"S drifted by {dS:.6g} without an event",
                )
            )
    return VerificationReport(
        run_id=ledger.run_id,
        seed=ledger.seed,
        units=ledger.units,
        entry_count=len(ledger.entries),
        leipnik_slacks=leipnik_slacks,
        heisenberg_slacks=heisenberg_slacks,
        event_deltas=event_deltas,
        cumulative_delta_S=ledger.entries[-1].S - ledger.entries[0].S,
        violations=violations,
    )


def parse_csv(text: str) -> list[dict]:
    """Parse a time-series CSV back into row dicts (floats + event tag)."""
    reader = csv.DictReader(io.StringIO(text))
    expected = CSV_HEADER.split(",")
    if reader.fieldnames != expected:
        raise ValueError(
            f"unexpected CSV header {reader.fieldnames}, want {expected}"
        )
    rows = []
    for row in reader:
        parsed = {k: float(row[k]) for k in expected[:-1]}
        parsed["event"] = row["event"]
        rows.append(parsed)
    return rows


def audit_rows(rows: list[dict], hbar: float = 1.0, k_B: float = 1.0) -> list[str]:
    """Re-audit parsed CSV rows; returns a list of violation strings.

    Tolerances are loosened to the CSV's 9-significant-digit resolution.
    """
    tol = 1e-6
    problems = []
    if not rows:
        return ["empty time series"]
    bound = leipnik_bound(hbar)
    for i, r in enumerate(rows):
        if abs(r["leipnik_bound"] - bound) > tol:
            problems.append(f"[bound] row {i}: stored bound != ln(pi*e*hbar)")
        if abs(r["leipnik_sum"] - (r["I_x"] + r["I_p"])) > tol:
            problems.append(f"[sum] row {i}: leipnik_sum != I_x + I_p")
        if r["leipnik_sum"] - bound < -tol:
            problems.append(f"[leipnik] row {i}: sum below bound")
        if r["heisenberg_product"] < 0.5 * hbar - HEISENBERG_TOL - tol:
            problems.append(f"[heisenberg] row {i}: product below hbar/2")
        if abs(r["S"] - k_B * r["I_p"]) > tol:
            problems.append(f"[thermo-identity] row {i}: S != k_B * I_p")
    for i in range(1, len(rows)):
        dS = rows[i]["S"] - rows[i - 1]["S"]
        if rows[i]["event"] == "absorption":
            if dS <= 0:
                problems.append(f"[event-entropy] row {i}: delta_S <= 0")
        elif dS < -(CONSTANCY_TOL + tol):
            problems.append(f"[second-law] row {i}: S decreased by {-dS:.3g}")
        if rows[i]["t"] <= rows[i - 1]["t"]:
            problems.append(f"[ordering] row {i}: time not increasing")
    return problems
