"""Command-line entry point.

    fwm match           --config cfg.json --out outdir
    fwm gv              --config cfg.json --out outdir [--k-min A --k-max B --n-samples N]
    fwm simulate        --config cfg.json --out outdir
    fwm efficiency-scan --config cfg.json --out outdir [--omega-z 0.05,0.5,...] [--parallel N]

Exit codes: 0 on success (an empty phase-matching report is physics, not
an error), 2 on a malformed configuration, 3 on numerical failure.
Outputs are deterministic: fixed float formatting, no timestamps.
"""

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .dispersion import DegenerateDispersion, group_velocity
from .params import SystemParams
from .phase_matching import (
    CONFIGURATIONS,
    CubicProblem,
    AlphaZero,
    default_q_max,
    discriminant,
    matching_residual,
    solve_configuration,
)
from .propagation import NaNEncountered, propagate
from .scenarios import ConfigError, ScenarioConfig
from .snapshots import snapshot_basename, write_snapshot
from .wavepackets import build_initial_state, efficiency, norm, spectral_peaks

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc


def _system_from(cfg, context="config"):
    if "system" not in cfg:
        raise ConfigError(f"missing 'system' block in {context}")
    try:
        return SystemParams.from_dict(cfg["system"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad system block: {exc}") from exc


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def cmd_match(config_path, out_dir):
    """Phase-matching report: roots, discriminants, and residual-scan curves."""
    cfg = _load_json(config_path)
    p = _system_from(cfg)
    if "k1" not in cfg:
        raise ConfigError("match config needs a 'k1' value")
    k1 = float(cfg["k1"])
    scan_cfg = cfg.get("scan", {})
    q_max = float(scan_cfg.get("q_max", 0) or default_q_max(k1, p))
    n_grid = int(scan_cfg.get("n_grid", 2001))

    report = {"system": p.to_dict(), "k1": k1, "configurations": []}
    for config in CONFIGURATIONS:
        entry = {
            "config": config.id,
            "signs": list(config.signs),
            "n_max": config.n_max,
        }
        if p.alpha != 0.0:
            problem = CubicProblem.from_pump(config.signs[0], k1, p)
            entry["discriminant"] = float(
                discriminant(
                    config.signs[0],
                    problem.omega_tilde_scaled,
                    problem.omega_z_scaled,
                )
            )
            entry["cubic_coefficients"] = [float(c) for c in problem.coefficients]
        else:
            entry["discriminant"] = None
            entry["cubic_coefficients"] = None
        entry["solutions"] = [
            sol.as_record() for sol in solve_configuration(config, k1, p)
        ]
        report["configurations"].append(entry)

    # Curves for graphical inspection: lhs = 2 q^2 against the per-config
    # rhs; their crossings are the phase-matched offsets.
    qs = np.linspace(-q_max, q_max, n_grid)
    lhs = 2.0 * qs * qs
    report["scan"] = {
        "q": [float(v) for v in qs],
        "lhs": [float(v) for v in lhs],
        "rhs": {
            str(config.id): [
                float(v)
                for v in lhs - matching_residual(k1, qs, config.signs, p)
            ]
            for config in CONFIGURATIONS
        },
    }
    os.makedirs(out_dir, exist_ok=True)
    _write_json(os.path.join(out_dir, "match.json"), report)
    return EXIT_OK


def _fmt(value):
    return "" if value is None else repr(float(value))


def cmd_gv(config_path, out_dir, k_min=None, k_max=None, n_samples=None):
    """Group velocities of pump and matched probes over a pump-momentum scan."""
    cfg = _load_json(config_path)
    p = _system_from(cfg)
    k_range = cfg.get("k_range", [-3.0, 3.0])
    k_lo = float(k_min if k_min is not None else k_range[0])
    k_hi = float(k_max if k_max is not None else k_range[1])
    count = int(n_samples if n_samples is not None else cfg.get("n_samples", 121))
    if count < 2 or not k_hi > k_lo:
        raise ConfigError("gv scan needs k_max > k_min and at least two samples")
    wanted = cfg.get("configurations", [c.id for c in CONFIGURATIONS])
    configs = [c for c in CONFIGURATIONS if c.id in wanted]

    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "gv.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["k1", "config", "q", "v_pump", "k2", "v_probe2", "k3", "v_probe3"]
        )
        for k1 in np.linspace(k_lo, k_hi, count):
            k1 = float(k1)
            for config in configs:
                s1, s2, s3 = config.signs
                try:
                    v_pump = float(group_velocity(k1, s1, p))
                except DegenerateDispersion:
                    writer.writerow([repr(k1), config.id, "", "", "", "", "", ""])
                    continue
                solutions = solve_configuration(config, k1, p)
                if s2 == s3:
                    # +-q give the same probe pair; keep one representative.
                    solutions = [sol for sol in solutions if sol.q > 0]
                if not solutions:
                    writer.writerow(
                        [repr(k1), config.id, "", repr(v_pump), "", "", "", ""]
                    )
                    continue
                for sol in solutions:
                    writer.writerow(
                        [
                            repr(k1),
                            config.id,
                            repr(sol.q),
                            repr(v_pump),
                            repr(sol.k2),
                            _fmt(group_velocity(sol.k2, s2, p)),
                            repr(sol.k3),
                            _fmt(group_velocity(sol.k3, s3, p)),
                        ]
                    )
    return EXIT_OK


def _peak_records(peaks):
    return [
        {
            "k_center": peak.k_center,
            "window_halfwidth": peak.window_halfwidth,
            "population": peak.population,
            "population1": peak.population1,
            "population2": peak.population2,
        }
        for peak in peaks
    ]


def cmd_simulate(config_path, out_dir):
    """Full split-step run with snapshots, conservation log and peak report."""
    scenario = ScenarioConfig.from_file(config_path)
    resolved = scenario.resolve()
    p = resolved.params
    initial = build_initial_state(resolved.all_packets(), resolved.grid, p)

    os.makedirs(out_dir, exist_ok=True)
    sidecars = []

    final, snapshots = propagate(
        initial,
        p,
        resolved.t_final,
        resolved.dt,
        snapshot_every=resolved.snapshot_every,
    )
    for index, snap in enumerate(snapshots):
        write_snapshot(out_dir, index, snap)
        sidecars.append(
            {
                "index": index,
                "file": snapshot_basename(index) + ".bin",
                "time": snap.time,
                "norm": snap.norm,
                "pi_momentum": snap.pi_momentum,
                "energy": snap.energy,
            }
        )

    watch = {"pump": resolved.pump.k_center}
    for i, seed in enumerate(resolved.seeds):
        watch[f"seed{i}"] = seed.k_center
    for mode in resolved.measured:
        watch[mode.label] = mode.k
    centers = sorted(set(watch.values()))
    peaks_initial = spectral_peaks(initial, centers, resolved.window)
    peaks_final = spectral_peaks(final, centers, resolved.window)
    eta = {
        mode.label: efficiency(initial, final, mode.k, resolved.window)
        for mode in resolved.measured
    }

    first, last = snapshots[0], snapshots[-1]
    pi_scale = max(abs(first.pi_momentum), 1e-30)
    summary = {
        "scenario": scenario.raw,
        "resolved": {
            "configuration": resolved.configuration.id,
            "signs": list(resolved.configuration.signs),
            "k1": resolved.pump.k_center,
            "seeds": [
                {"k": s.k_center, "branch": s.branch, "amplitude": s.amplitude}
                for s in resolved.seeds
            ],
            "measured": [
                {"k": m.k, "branch": m.branch, "label": m.label}
                for m in resolved.measured
            ],
            "grid": {"n": resolved.grid.n_points, "length": resolved.grid.length},
            "window": resolved.window,
            "t_final": resolved.t_final,
            "dt": resolved.dt,
        },
        "snapshots": sidecars,
        "conservation": {
            "norm_initial": first.norm,
            "norm_final": last.norm,
            "norm_drift_rel": abs(last.norm - first.norm) / first.norm,
            "pi_initial": first.pi_momentum,
            "pi_final": last.pi_momentum,
            "pi_drift_rel": abs(last.pi_momentum - first.pi_momentum) / pi_scale,
            "energy_initial": first.energy,
            "energy_final": last.energy,
            "energy_drift_rel": abs(last.energy - first.energy)
            / max(abs(first.energy), 1e-30),
        },
        "peaks": {
            "initial": _peak_records(peaks_initial),
            "final": _peak_records(peaks_final),
        },
        "efficiency_percent": eta,
    }
    _write_json(os.path.join(out_dir, "summary.json"), summary)
    return EXIT_OK


def _scan_point(config_json, omega_z):
    """One efficiency-scan point; module-level so worker processes can run it."""
    scenario = ScenarioConfig.from_json(config_json)
    try:
        resolved = scenario.resolve(omega_z=omega_z)
    except ConfigError:
        return None  # phase matching failed at this omega_z
    if not resolved.measured:
        raise ConfigError("efficiency scan needs at least one 'measure' entry")
    p = resolved.params
    initial = build_initial_state(resolved.all_packets(), resolved.grid, p)
    final, _ = propagate(initial, p, resolved.t_final, resolved.dt)
    mode = resolved.measured[0]
    return efficiency(initial, final, mode.k, resolved.window)


def cmd_efficiency_scan(config_path, out_dir, omega_z_list=None, parallel=1):
    """Conversion efficiency versus Zeeman splitting, rematched per point."""
    scenario = ScenarioConfig.from_file(config_path)
    if omega_z_list is None:
        omega_z_list = scenario.raw.get("scan", {}).get("omega_z")
    if not omega_z_list:
        raise ConfigError(
            "efficiency scan needs omega_z values (--omega-z or scan.omega_z)"
        )
    omega_z_list = [float(v) for v in omega_z_list]
    base = _system_from(scenario.raw, "scenario")
    config_json = scenario.to_json()

    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            etas = list(
                pool.map(_scan_point, [config_json] * len(omega_z_list), omega_z_list)
            )
    else:
        etas = [_scan_point(config_json, oz) for oz in omega_z_list]

    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "efficiency.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["omega_z", "g", "g1", "g2", "eta_percent"])
        for omega_z, eta in zip(omega_z_list, etas):
            writer.writerow(
                [repr(omega_z), repr(base.g), repr(base.g1), repr(base.g2), _fmt(eta)]
            )
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fwm",
        description="Degenerate four-wave mixing in a spin-orbit-coupled "
        "two-component condensate: phase matching and split-step simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", required=True, help="JSON configuration file")
        sp.add_argument("--out", required=True, help="output directory")

    common(sub.add_parser("match", help="solve the phase-matching conditions"))
    gv = sub.add_parser("gv", help="group-velocity scan over pump momentum")
    common(gv)
    gv.add_argument("--k-min", type=float, default=None)
    gv.add_argument("--k-max", type=float, default=None)
    gv.add_argument("--n-samples", type=int, default=None)
    common(sub.add_parser("simulate", help="run one scenario and write snapshots"))
    scan = sub.add_parser(
        "efficiency-scan", help="efficiency versus Zeeman splitting"
    )
    common(scan)
    scan.add_argument(
        "--omega-z", default=None, help="comma-separated Zeeman splittings"
    )
    scan.add_argument("--parallel", type=int, default=1)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "match":
            return cmd_match(args.config, args.out)
        if args.command == "gv":
            return cmd_gv(args.config, args.out, args.k_min, args.k_max, args.n_samples)
        if args.command == "simulate":
            return cmd_simulate(args.config, args.out)
        if args.command == "efficiency-scan":
            omega_z = (
                [float(v) for v in args.omega_z.split(",")] if args.omega_z else None
            )
            return cmd_efficiency_scan(args.config, args.out, omega_z, args.parallel)
        raise AssertionError(f"unhandled command {args.command}")
    except NaNEncountered as exc:
        print(f"fwm: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        # ConfigError, AlphaZero, GridTooCoarse, OverlappingWindows and the
        # run-parameter validations all signal a bad configuration.
        print(f"fwm: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
