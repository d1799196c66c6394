"""
Command-line front end.

Verbs: `simulate` (evolve a packet through a schedule with optional
absorption events), `landauer` (the one-bit box), `demon` (pressure or
temperature variant), `verify` (re-audit an existing time-series CSV) and
`validate` (check a config without running). Outputs are written as static
files: CSV time series, text + JSON reports, SVG plots. Exit codes: 0 when
verification passes, 2 when it fails, 1 on usage or config errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analytic import GaussianPacket
from .config import load_config, validate_config
from .events import Photon, absorb, brillouin_check, compton_sigma
from .evolution import free_propagate
from .grid import from_gaussian, split_seed
from .ledger import EntropyLedger, fmt, parse_csv, audit_rows
from .scenarios import landauer_box, pressure_demon, temperature_demon
from .units import UnitSystem


class ConfigError(Exception):
    pass


def _units_from(doc: dict) -> UnitSystem:
    u = doc.get("units", {})
    return UnitSystem(
        hbar=float(u.get("hbar", 1.0)),
        k_B=float(u.get("k_B", 1.0)),
        c=float(u.get("c", 1.0)),
    )


def run_simulation(doc: dict, seed_override: int | None = None) -> EntropyLedger:
    """Execute the `simulate` section of a validated config."""
    sim = doc["simulate"]
    units = _units_from(doc)
    seed = seed_override if seed_override is not None else sim.get("seed", 0)
    grid = sim["grid"]
    pk = sim["packet"]
    packet = GaussianPacket(
        mu_x=float(pk["mu_x"]),
        p0=float(pk["p0"]),
        sigma0=float(pk["sigma0"]),
        mass=float(pk["mass"]),
        t=0.0,
        hbar=units.hbar,
    )
    psi = from_gaussian(packet, float(grid["x0"]), float(grid["dx"]), int(grid["N"]))
    schedule = [float(t) for t in sim["schedule"]]
    events = sorted(sim.get("events", []), key=lambda ev: ev["t1"])

    ledger = EntropyLedger(units=units, run_id=f"simulate-{seed}", seed=seed)
    mass = packet.mass
    p_mean = packet.p0
    t_cur = schedule[0]
    if t_cur > 0:
        psi = free_propagate(psi, mass, t_cur)

    # merge schedule points and event times into one ascending timeline
    timeline = [(t, None) for t in schedule]
    for i, ev in enumerate(events):
        t1 = float(ev["t1"])
        timeline = [(t, e) for t, e in timeline if t != t1 or e is not None]
        timeline.append((t1, (i, ev)))
    timeline.sort(key=lambda te: te[0])

    for t, tagged in timeline:
        if t > t_cur:
            psi = free_propagate(psi, mass, t - t_cur)
            t_cur = t
        if tagged is None:
            ledger.record(t, psi)
            continue
        i, ev = tagged
        photon = Photon.from_energy(
            float(ev["photon_energy"]), int(ev.get("direction", 1)), units.c
        )
        sigma_loc = (
            float(ev["sigma_loc"])
            if "sigma_loc" in ev
            else compton_sigma(photon, units.hbar)
        )
        T0 = float(ev.get("T0", 0.0))
        if T0 > 0:
            check = brillouin_check(photon, T0, units.k_B)
            if not check["ok"]:
                print(
                    f"warning: event at t={t}: photon energy only "
                    f"{check['ratio']:.3g} k_B*T0, localization may be indistinct",
                    file=sys.stderr,
                )
        psi, event = absorb(
            psi,
            mass,
            p_mean,
            photon,
            sigma_loc,
            t,
            split_seed(ledger.seed, i),
            k_B=units.k_B,
            environment_temperature=T0,
        )
        p_mean += photon.momentum
        ledger.record(t, psi, event_tag="absorption", event=event)
    return ledger


def _write_plots(ledger: EntropyLedger, out_dir: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    t = [e.t for e in ledger.entries]
    i_x = [e.I_x for e in ledger.entries]
    s = [e.S for e in ledger.entries]
    event_t = [e.t for e in ledger.entries if e.event_tag == "absorption"]

    fig, (ax1, ax2) = plt.subplots(2, 1, sharex=True, figsize=(7, 6))
    ax1.plot(t, i_x, marker=".", color="tab:blue")
    ax1.set_ylabel("position entropy $I_x$ (nats)")
    ax2.plot(t, s, marker=".", color="tab:red")
    ax2.set_ylabel("thermodynamic entropy $S$ ($k_B$)")
    ax2.set_xlabel("t")
    for ax in (ax1, ax2):
        for te in event_t:
            ax.axvline(te, color="gray", linestyle="--", alpha=0.7)
        ax.grid(alpha=0.3)
    fig.suptitle(f"run {ledger.run_id}")
    fig.savefig(out_dir / "entropy.svg")
    plt.close(fig)


def _emit(ledger: EntropyLedger, out_dir: Path, formats: set[str]) -> bool:
    out_dir.mkdir(parents=True, exist_ok=True)
    report = ledger.verify()
    if "csv" in formats:
        (out_dir / "timeseries.csv").write_text(ledger.to_csv())
    if "report" in formats:
        (out_dir / "report.txt").write_text(report.to_text())
        (out_dir / "report.json").write_text(report.to_json())
    if "plots" in formats:
        _write_plots(ledger, out_dir)
    print(report.to_text(), end="")
    return report.passed


def _resolve_formats(args, doc: dict) -> set[str]:
    if args.format:
        chosen = set(args.format)
    else:
        chosen = set(doc.get("output", {}).get("formats", ["all"]))
    if "all" in chosen or not chosen:
        chosen = {"csv", "report", "plots"}
    return chosen


def _resolve_out(args, doc: dict) -> Path:
    if args.out:
        return Path(args.out)
    return Path(doc.get("output", {}).get("directory", "out"))


def cmd_simulate(args) -> int:
    doc = load_config(args.config)
    diags = validate_config(doc)
    if "simulate" not in doc:
        diags.append(f"{args.config}: missing 'simulate' section")
    if diags:
        for d in diags:
            print(f"{args.config}: {d}", file=sys.stderr)
        return 1
    ledger = run_simulation(doc, args.seed)
    ok = _emit(ledger, _resolve_out(args, doc), _resolve_formats(args, doc))
    return 0 if ok else 2


def cmd_landauer(args) -> int:
    doc = {}
    if args.config:
        doc = load_config(args.config)
        diags = validate_config(doc)
        if diags:
            for d in diags:
                print(f"{args.config}: {d}", file=sys.stderr)
            return 1
    sec = doc.get("landauer", {})
    mode = args.mode or sec.get("mode")
    T = args.T if args.T is not None else sec.get("T")
    epsilon = args.epsilon if args.epsilon is not None else sec.get("epsilon")
    if mode is None or T is None:
        print("landauer: --mode and --T are required", file=sys.stderr)
        return 1
    outcome = landauer_box(mode, float(T), epsilon)
    record = {
        "scenario": "landauer",
        "mode": outcome.mode,
        "work_kBT": outcome.work,
        "entropy_produced_kB": outcome.entropy_produced,
        "info_entropy_before_nats": outcome.info_entropy_before,
        "info_entropy_after_nats": outcome.info_entropy_after,
    }
    out_dir = _resolve_out(args, doc)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "landauer.json").write_text(
        json.dumps(record, indent=2, sort_keys=True) + "\n"
    )
    print(f"mode: {outcome.mode}")
    print(f"entropy_produced: {fmt(outcome.entropy_produced)} k_B")
    print(f"work: {fmt(outcome.work)} k_B*T")
    print(
        f"info entropy: {fmt(outcome.info_entropy_before)} -> "
        f"{fmt(outcome.info_entropy_after)} nats"
    )
    return 0


def cmd_demon(args) -> int:
    doc = {}
    if args.config:
        doc = load_config(args.config)
        diags = validate_config(doc)
        if diags:
            for d in diags:
                print(f"{args.config}: {d}", file=sys.stderr)
            return 1
    sec = dict(doc.get("demon", {}))
    if args.variant:
        sec["variant"] = args.variant
    if args.seed is not None:
        sec["seed"] = args.seed
    for name in ("trials", "box_width", "aperture", "sigma_p", "samples"):
        v = getattr(args, name)
        if v is not None:
            sec[name] = v
    variant = sec.get("variant")
    seed = sec.get("seed", 0)
    units = _units_from(doc)
    if variant == "pressure":
        report = pressure_demon(
            int(sec.get("trials", 10_000)),
            float(sec["box_width"]),
            float(sec["aperture"]),
            seed,
        )
    elif variant == "temperature":
        report = temperature_demon(
            float(sec["sigma_p"]),
            float(sec["aperture"]),
            units.hbar,
            int(sec.get("samples", 100_000)),
            seed,
        )
    else:
        print("demon: --variant pressure|temperature required", file=sys.stderr)
        return 1
    record = {
        "scenario": "demon",
        "variant": report.variant,
        "trials": report.trials,
        "mean_net_kB": report.mean_net,
        "passed": report.passed,
        "details": report.details,
    }
    out_dir = _resolve_out(args, doc)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "demon.json").write_text(
        json.dumps(record, indent=2, sort_keys=True) + "\n"
    )
    print(f"variant: {report.variant}")
    print(f"trials: {report.trials}")
    if report.variant == "pressure":
        print(f"mean net production: {fmt(report.mean_net)} k_B")
    else:
        d = report.details
        print(
            f"passage probability: estimate {fmt(d['passage_probability_estimate'])}"
            f" vs analytic {fmt(d['passage_probability_analytic'])}"
        )
    print(f"result: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 2


def cmd_verify(args) -> int:
    path = Path(args.csv)
    if not path.exists():
        print(f"verify: no such file {path}", file=sys.stderr)
        return 1
    try:
        rows = parse_csv(path.read_text())
    except ValueError as exc:
        print(f"verify: {path}: {exc}", file=sys.stderr)
        return 1
    problems = audit_rows(rows, hbar=args.hbar, k_B=args.k_B)
    for p in problems:
        print(p)
    print(f"result: {'PASS' if not problems else 'FAIL'}")
    return 0 if not problems else 2


def cmd_validate(args) -> int:
    try:
        doc = load_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"{args.config}: {exc}", file=sys.stderr)
        return 1
    diags = validate_config(doc)
    for d in diags:
        print(f"{args.config}: {d}")
    return 0 if not diags else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entroplab",
        description="wave-packet entropy production laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="YAML run configuration")
        p.add_argument("--seed", type=int, help="override the config seed")
        p.add_argument("--out", help="output directory")
        p.add_argument(
            "--format",
            action="append",
            choices=["csv", "report", "plots", "all"],
            help="output artifacts to write (repeatable)",
        )

    p = sub.add_parser("simulate", help="evolve a packet through a schedule")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("landauer", help="one-bit piston-box scenario")
    add_common(p)
    p.add_argument("--mode")
    p.add_argument("--T", type=float)
    p.add_argument("--epsilon", type=float)
    p.set_defaults(func=cmd_landauer)

    p = sub.add_parser("demon", help="Maxwell-demon scenario")
    add_common(p)
    p.add_argument("--variant", choices=["pressure", "temperature"])
    p.add_argument("--trials", type=int)
    p.add_argument("--box-width", dest="box_width", type=float)
    p.add_argument("--aperture", type=float)
    p.add_argument("--sigma-p", dest="sigma_p", type=float)
    p.add_argument("--samples", type=int)
    p.set_defaults(func=cmd_demon)

    p = sub.add_parser("verify", help="re-audit an existing time-series CSV")
    p.add_argument("csv")
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--k-B", dest="k_B", type=float, default=1.0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("validate", help="check a config without running it")
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "simulate" and not args.config:
        print("simulate: --config is required", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
