"""Readers for the data formats the simulation CLI emits.

This package deliberately re-implements the readers from the documented
formats (match.json, gv.csv, efficiency.csv, snap_*.bin + sidecars)
instead of importing the simulation package: plots must keep working
against the files alone.

Snapshot binary layout: little-endian float64 (real, imag) pairs holding
psi1(x), psi2(x), then their unnormalized DFTs in FFT ordering; 8*n
doubles per file, with n taken from the JSON sidecar.
"""

import csv
import glob
import json
import os

import numpy as np


class InputError(ValueError):
    """Missing, corrupt, or inconsistent input data."""


def _read_json(path):
    if not os.path.exists(path):
        raise InputError(f"missing file: {path}")
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"corrupt JSON in {path}: {exc}") from exc


def load_match_report(in_dir):
    report = _read_json(os.path.join(in_dir, "match.json"))
    for key in ("system", "k1", "configurations", "scan"):
        if key not in report:
            raise InputError(f"match.json lacks required key {key!r}")
    return report


def _read_csv_rows(path):
    if not os.path.exists(path):
        raise InputError(f"missing file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise InputError(f"{path} has no data rows")
    return rows


def load_gv_table(in_dir):
    return _read_csv_rows(os.path.join(in_dir, "gv.csv"))


def load_efficiency_tables(in_dir):
    """Every efficiency CSV in the directory, one curve set per file."""
    paths = sorted(glob.glob(os.path.join(in_dir, "*.csv")))
    if not paths:
        raise InputError(f"no efficiency CSV files in {in_dir}")
    return {path: _read_csv_rows(path) for path in paths}


class SnapshotSeries:
    """Time-ordered snapshot collection with lazily loaded field arrays."""

    def __init__(self, in_dir):
        sidecar_paths = sorted(glob.glob(os.path.join(in_dir, "snap_*.json")))
        if not sidecar_paths:
            raise InputError(f"no snapshot sidecars (snap_*.json) in {in_dir}")
        self.in_dir = in_dir
        self.sidecars = [_read_json(path) for path in sidecar_paths]
        self.bases = [path[: -len(".json")] for path in sidecar_paths]
        grids = {
            (int(s["grid"]["n"]), float(s["grid"]["length"])) for s in self.sidecars
        }
        if len(grids) != 1:
            raise InputError(f"snapshots disagree on the grid: {sorted(grids)}")
        self.n, self.length = grids.pop()
        self.times = [float(s["time"]) for s in self.sidecars]
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise InputError(f"snapshot times are not strictly increasing: {self.times}")
        self._cache = {}

    def __len__(self):
        return len(self.sidecars)

    @property
    def dx(self):
        return self.length / self.n

    @property
    def x(self):
        return (np.arange(self.n) - self.n // 2) * self.dx

    @property
    def k_shifted(self):
        return np.fft.fftshift(2.0 * np.pi * np.fft.fftfreq(self.n, d=self.dx))

    def arrays(self, index):
        """(psi1, psi2, f1, f2) of snapshot `index`, f's in FFT ordering."""
        if index not in self._cache:
            raw = np.fromfile(self.bases[index] + ".bin", dtype="<c16")
            if raw.size != 4 * self.n:
                raise InputError(
                    f"{self.bases[index]}.bin holds {raw.size} complex values, "
                    f"expected {4 * self.n}"
                )
            self._cache[index] = tuple(
                raw[i * self.n : (i + 1) * self.n] for i in range(4)
            )
        return self._cache[index]

    def moduli_x(self, index):
        psi1, psi2, _, _ = self.arrays(index)
        return np.abs(psi1), np.abs(psi2)

    def moduli_k(self, index):
        """|Phi| with the continuum normalization dx/sqrt(2 pi), shifted."""
        _, _, f1, f2 = self.arrays(index)
        scale = self.dx / np.sqrt(2.0 * np.pi)
        return (
            np.fft.fftshift(np.abs(f1)) * scale,
            np.fft.fftshift(np.abs(f2)) * scale,
        )

    def history_maps(self):
        """(x,t) and (k,t) modulus maps per component, rows ordered by time."""
        maps = {"x1": [], "x2": [], "k1": [], "k2": []}
        for i in range(len(self)):
            m1, m2 = self.moduli_x(i)
            maps["x1"].append(m1)
            maps["x2"].append(m2)
            f1, f2 = self.moduli_k(i)
            maps["k1"].append(f1)
            maps["k2"].append(f2)
        return {key: np.array(rows) for key, rows in maps.items()}
