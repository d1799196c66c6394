"""
Run configuration: a nested YAML document, validated before anything runs.

Top-level sections: `units`, `output`, and one section per verb
(`simulate`, `landauer`, `demon`). Validation is structural plus physical
(positivity, grid adequacy, event times inside the schedule) and returns
diagnostics instead of raising, so `validate` can report everything at
once.
"""

from __future__ import annotations

from typing import Any

import yaml

from .scenarios import LANDAUER_MODES

TOP_LEVEL_KEYS = {"units", "output", "simulate", "landauer", "demon"}

_SECTION_KEYS = {
    "units": {"hbar", "k_B", "c"},
    "output": {"directory", "formats"},
    "simulate": {"grid", "packet", "schedule", "events", "seed"},
    "simulate.grid": {"x0", "dx", "N"},
    "simulate.packet": {"mu_x", "p0", "sigma0", "mass"},
    "simulate.event": {"t1", "photon_energy", "direction", "sigma_loc", "preset", "T0"},
    "landauer": {"mode", "T", "epsilon"},
    "demon": {
        "variant",
        "trials",
        "box_width",
        "aperture",
        "sigma_p",
        "samples",
        "seed",
    },
}

FORMATS = {"csv", "report", "plots", "all"}


def load_config(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = yaml.safe_load(fh)
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: config must be a mapping at top level")
    return doc


def _check_keys(section: dict, allowed: set, where: str, diags: list) -> None:
    for key in section:
        if key not in allowed:
            diags.append(f"{where}.{key}: unknown key")


def _positive(section: dict, key: str, where: str, diags: list) -> None:
    v = section.get(key)
    if v is None:
        diags.append(f"{where}.{key}: required")
    elif not isinstance(v, (int, float)) or v <= 0:
        diags.append(f"{where}.{key}: must be a positive number, got {v!r}")


def _number(section: dict, key: str, where: str, diags: list) -> None:
    v = section.get(key)
    if v is None:
        diags.append(f"{where}.{key}: required")
    elif not isinstance(v, (int, float)):
        diags.append(f"{where}.{key}: must be a number, got {v!r}")


def validate_config(doc: dict) -> list[str]:
    """Full structural and physical validation; no execution.

    Returns a list of diagnostics, empty when the config is runnable.
    """
    diags: list[str] = []
    if not isinstance(doc, dict):
        return ["config must be a mapping at top level"]
    _check_keys(doc, TOP_LEVEL_KEYS, "config", diags)

    units = doc.get("units", {})
    if not isinstance(units, dict):
        diags.append("units: must be a mapping")
    else:
        _check_keys(units, _SECTION_KEYS["units"], "units", diags)
        for key in units:
            if key in _SECTION_KEYS["units"]:
                _positive(units, key, "units", diags)

    output = doc.get("output", {})
    if not isinstance(output, dict):
        diags.append("output: must be a mapping")
    else:
        _check_keys(output, _SECTION_KEYS["output"], "output", diags)
        for f in output.get("formats", []):
            if f not in FORMATS:
                diags.append(f"output.formats: unknown format {f!r}")

    if "simulate" in doc:
        diags.extend(_validate_simulate(doc["simulate"], units))
    if "landauer" in doc:
        diags.extend(_validate_landauer(doc["landauer"]))
    if "demon" in doc:
        diags.extend(_validate_demon(doc["demon"]))
    return diags


def _validate_simulate(sim: Any, units: Any) -> list[str]:
    diags: list[str] = []
    if not isinstance(sim, dict):
        return ["simulate: must be a mapping"]
    _check_keys(sim, _SECTION_KEYS["simulate"], "simulate", diags)

    grid = sim.get("grid")
    if not isinstance(grid, dict):
        diags.append("simulate.grid: required mapping")
        grid = {}
    else:
        _check_keys(grid, _SECTION_KEYS["simulate.grid"], "simulate.grid", diags)
        _number(grid, "x0", "simulate.grid", diags)
        _positive(grid, "dx", "simulate.grid", diags)
        n = grid.get("N")
        if not isinstance(n, int) or n < 256 or (n & (n - 1)) != 0:
            diags.append(
                f"simulate.grid.N: must be a power of two >= 256, got {n!r}"
            )

    packet = sim.get("packet")
    if not isinstance(packet, dict):
        diags.append("simulate.packet: required mapping")
        packet = {}
    else:
        _check_keys(packet, _SECTION_KEYS["simulate.packet"], "simulate.packet", diags)
        _number(packet, "mu_x", "simulate.packet", diags)
        _number(packet, "p0", "simulate.packet", diags)
        _positive(packet, "sigma0", "simulate.packet", diags)
        _positive(packet, "mass", "simulate.packet", diags)

    schedule = sim.get("schedule")
    if (
        not isinstance(schedule, list)
        or not schedule
        or not all(isinstance(t, (int, float)) for t in schedule)
    ):
        diags.append("simulate.schedule: required non-empty list of numbers")
        schedule = []
    else:
        if schedule[0] < 0:
            diags.append("simulate.schedule: must start at t >= 0")
        if any(b <= a for a, b in zip(schedule, schedule[1:])):
            diags.append("simulate.schedule: must be strictly ascending")

    seed = sim.get("seed", 0)
    if not isinstance(seed, int) or seed < 0:
        diags.append(f"simulate.seed: must be a non-negative integer, got {seed!r}")

    events = sim.get("events", [])
    if not isinstance(events, list):
        diags.append("simulate.events: must be a list")
        events = []
    for i, ev in enumerate(events):
        where = f"simulate.events[{i}]"
        if not isinstance(ev, dict):
            diags.append(f"{where}: must be a mapping")
            continue
        _check_keys(ev, _SECTION_KEYS["simulate.event"], where, diags)
        _positive(ev, "t1", where, diags)
        _positive(ev, "photon_energy", where, diags)
        if "direction" in ev and ev["direction"] not in (1, -1):
            diags.append(f"{where}.direction: must be 1 or -1")
        if "sigma_loc" in ev and "preset" in ev:
            diags.append(f"{where}: give sigma_loc or preset, not both")
        elif "sigma_loc" in ev:
            _positive(ev, "sigma_loc", where, diags)
        elif ev.get("preset") not in ("compton",):
            diags.append(f"{where}: needs sigma_loc or preset: compton")
        if "T0" in ev:
            _positive(ev, "T0", where, diags)
        t1 = ev.get("t1")
        if (
            schedule
            and isinstance(t1, (int, float))
            and not (schedule[0] < t1 <= schedule[-1])
        ):
            diags.append(f"{where}.t1: event outside schedule span")

    # grid-adequacy precheck: the initial packet needs mu_x +/- 6 sigma0
    if not diags and isinstance(units, dict):
        hbar = units.get("hbar", 1.0)
        x0, dx, n = grid["x0"], grid["dx"], grid["N"]
        mu, sigma0 = packet["mu_x"], packet["sigma0"]
        if mu - 6 * sigma0 < x0 or mu + 6 * sigma0 > x0 + n * dx:
            diags.append(
                "simulate.grid: too narrow for mu_x +/- 6*sigma0 of the packet"
            )
        for i, ev in enumerate(events):
            sigma_loc = ev.get(
                "sigma_loc", hbar / (2.0 * ev["photon_energy"])
            )
            if sigma_loc < 4 * dx:
                diags.append(
                    f"simulate.events[{i}]: sigma_loc {sigma_loc:g} below 4*dx"
                )
    return diags


def _validate_landauer(sec: Any) -> list[str]:
    diags: list[str] = []
    if not isinstance(sec, dict):
        return ["landauer: must be a mapping"]
    _check_keys(sec, _SECTION_KEYS["landauer"], "landauer", diags)
    if sec.get("mode") not in LANDAUER_MODES:
        diags.append(
            f"landauer.mode: must be one of {LANDAUER_MODES}, got {sec.get('mode')!r}"
        )
    _positive(sec, "T", "landauer", diags)
    if sec.get("mode") == "measured-with-sensor":
        _positive(sec, "epsilon", "landauer", diags)
    return diags


def _validate_demon(sec: Any) -> list[str]:
    diags: list[str] = []
    if not isinstance(sec, dict):
        return ["demon: must be a mapping"]
    _check_keys(sec, _SECTION_KEYS["demon"], "demon", diags)
    variant = sec.get("variant")
    if variant == "pressure":
        _positive(sec, "trials", "demon", diags)
        _positive(sec, "box_width", "demon", diags)
        _positive(sec, "aperture", "demon", diags)
        bw, ap = sec.get("box_width"), sec.get("aperture")
        if (
            isinstance(bw, (int, float))
            and isinstance(ap, (int, float))
            and ap > bw / 2.0
        ):
            diags.append("demon.aperture: must not exceed box_width/2")
    elif variant == "temperature":
        _positive(sec, "sigma_p", "demon", diags)
        _positive(sec, "aperture", "demon", diags)
        _positive(sec, "samples", "demon", diags)
    else:
        diags.append(
            f"demon.variant: must be 'pressure' or 'temperature', got {variant!r}"
        )
    if "seed" in sec and (not isinstance(sec["seed"], int) or sec["seed"] < 0):
        diags.append("demon.seed: must be a non-negative integer")
    return diags
