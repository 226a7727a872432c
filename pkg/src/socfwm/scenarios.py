"""Scenario configuration: JSON schema, auto-derived seeds and grids.

A scenario file fixes the system parameters, the pump, the seeded and
measured modes of one FWM configuration, the grid, and the run controls.
Mode entries may give explicit {"k": ..., "branch": ...} values or select
a phase-matching root with {"side": "plus"|"minus", "root_rank": r}:
rank r indexes the configuration's offsets q sorted in descending order,
side "plus" meaning the wave at k1 + q on branch s2 and "minus" the wave
at k1 - q on branch s3.

An "auto" grid is sized so that no packet approaches the periodic
boundary (length = 2 * (v_max * t_final + 5 w)) and so that every
participating wavenumber sits well below the Nyquist mode.
"""

import json
from dataclasses import dataclass

import numpy as np

from .dispersion import group_velocity
from .params import SystemParams
from .phase_matching import CONFIGURATIONS, solve_configuration
from .propagation import Grid
from .wavepackets import SPECTRAL_MARGIN, WavepacketSpec, default_window

# Headroom of the Nyquist wavenumber over the largest packet wavenumber.
NYQUIST_SAFETY = 1.4
MIN_GRID_POINTS = 1024
BOUNDARY_CLEARANCE_WIDTHS = 5.0


class ConfigError(ValueError):
    """Malformed or inconsistent scenario configuration."""


def _require(mapping, key, context):
    if key not in mapping:
        raise ConfigError(f"missing key {key!r} in {context}")
    return mapping[key]


@dataclass(frozen=True)
class ResolvedMode:
    """A concrete wave: center wavenumber, branch, and its selector label."""

    k: float
    branch: int
    label: str


@dataclass
class ResolvedScenario:
    """Scenario with all auto entries replaced by concrete numbers."""

    params: SystemParams
    configuration: object
    pump: WavepacketSpec
    seeds: list
    measured: list
    width: float
    grid: Grid
    t_final: float
    dt: float
    snapshot_every: int
    window: float

    def all_packets(self):
        return [self.pump] + list(self.seeds)


@dataclass
class ScenarioConfig:
    """Raw scenario as parsed from JSON; resolve() derives the rest."""

    raw: dict

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"top-level JSON value in {path} must be an object")
        return cls(raw=raw)

    def to_json(self):
        return json.dumps(self.raw, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls(raw=json.loads(text))

    def system_params(self, omega_z=None):
        system = dict(_require(self.raw, "system", "scenario"))
        if omega_z is not None:
            system["omega_z"] = omega_z
        try:
            return SystemParams.from_dict(system)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad system block: {exc}") from exc

    def resolve(self, omega_z=None):
        """Fill auto seeds from phase matching and size an auto grid."""
        raw = self.raw
        p = self.system_params(omega_z)
        config_id = int(_require(raw, "configuration", "scenario"))
        config = next((c for c in CONFIGURATIONS if c.id == config_id), None)
        if config is None:
            raise ConfigError(f"configuration must be one of 1..4, got {config_id}")
        pump_block = _require(raw, "pump", "scenario")
        k1 = float(_require(pump_block, "k1", "pump"))
        pump_amplitude = float(pump_block.get("amplitude", 1.0))
        width = float(_require(raw, "width", "scenario"))

        solutions = solve_configuration(config, k1, p)
        roots_desc = sorted((sol.q for sol in solutions), reverse=True)

        def resolve_mode(entry, context):
            if "k" in entry:
                return ResolvedMode(
                    k=float(entry["k"]),
                    branch=int(_require(entry, "branch", context)),
                    label=f"k={float(entry['k'])}",
                )
            side = _require(entry, "side", context)
            rank = int(entry.get("root_rank", 0))
            if side not in ("plus", "minus"):
                raise ConfigError(f"side must be 'plus' or 'minus' in {context}")
            if rank >= len(roots_desc):
                raise ConfigError(
                    f"{context}: root_rank {rank} requested but configuration "
                    f"{config.id} has {len(roots_desc)} root(s) at k1={k1}"
                )
            q = roots_desc[rank]
            if side == "plus":
                return ResolvedMode(k1 + q, config.signs[1], f"plus/{rank}")
            return ResolvedMode(k1 - q, config.signs[2], f"minus/{rank}")

        seeds = []
        seed_modes = []
        for i, entry in enumerate(raw.get("seeds", [])):
            mode = resolve_mode(entry, f"seeds[{i}]")
            seed_modes.append(mode)
            seeds.append(
                WavepacketSpec(
                    amplitude=float(_require(entry, "amplitude", f"seeds[{i}]")),
                    k_center=mode.k,
                    branch=mode.branch,
                    width=width,
                )
            )
        measured = [
            resolve_mode(entry, f"measure[{i}]")
            for i, entry in enumerate(raw.get("measure", []))
        ]

        run = _require(raw, "run", "scenario")
        t_final = float(_require(run, "t_final", "run"))
        dt = float(_require(run, "dt", "run"))
        snapshot_every = int(run.get("snapshot_every", 0))

        pump = WavepacketSpec(
            amplitude=pump_amplitude, k_center=k1, branch=config.signs[0], width=width
        )
        modes = [ResolvedMode(k1, config.signs[0], "pump")] + seed_modes + measured
        grid = self._resolve_grid(raw.get("grid", "auto"), modes, width, t_final, p)
        window = float(raw.get("window", 0) or default_window(width, grid))
        return ResolvedScenario(
            params=p,
            configuration=config,
            pump=pump,
            seeds=seeds,
            measured=measured,
            width=width,
            grid=grid,
            t_final=t_final,
            dt=dt,
            snapshot_every=snapshot_every,
            window=window,
        )

    @staticmethod
    def _resolve_grid(grid_block, modes, width, t_final, p):
        if grid_block == "auto":
            grid_block = {}
        if not isinstance(grid_block, dict):
            raise ConfigError("grid must be 'auto' or an object")
        length = grid_block.get("length", "auto")
        n = grid_block.get("n", "auto")
        if length == "auto":
            v_max = max(abs(group_velocity(m.k, m.branch, p)) for m in modes)
            length = 2.0 * (v_max * t_final + BOUNDARY_CLEARANCE_WIDTHS * width)
        length = float(length)
        k_need = NYQUIST_SAFETY * (
            max(abs(m.k) for m in modes) + SPECTRAL_MARGIN / width
        )
        if n == "auto":
            n = MIN_GRID_POINTS
            while np.pi * n / length < k_need:
                n *= 2
        n = int(n)
        return Grid(n_points=n, length=length)
