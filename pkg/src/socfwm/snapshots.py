"""On-disk snapshot format shared with external plotting tools.

Each snapshot is a flat binary file of little-endian float64 pairs
(real, imaginary) holding, in order, psi1 and psi2 on the spatial grid
followed by their unnormalized discrete Fourier transforms in numpy's
FFT ordering: 8 * n doubles in total.  A JSON sidecar with the same stem
carries the time stamp, grid metadata and conservation diagnostics, so a
consumer never needs to parse the binary blindly.
"""

import json
import os

import numpy as np

from .propagation import Grid, SpinorField


def snapshot_basename(index):
    return f"snap_{index:06d}"


def write_snapshot(out_dir, index, snapshot):
    """Write one Snapshot (field + diagnostics) as .bin plus .json sidecar."""
    field = snapshot.field
    f1, f2 = field.fourier()
    blob = np.concatenate([field.psi1, field.psi2, f1, f2]).astype("<c16")
    base = os.path.join(out_dir, snapshot_basename(index))
    with open(base + ".bin", "wb") as fh:
        fh.write(blob.tobytes())
    grid = field.grid
    dens1 = float(grid.dx * np.sum(np.abs(field.psi1) ** 2))
    dens2 = float(grid.dx * np.sum(np.abs(field.psi2) ** 2))
    sidecar = {
        "index": index,
        "time": field.time,
        "grid": {"n": grid.n_points, "length": grid.length},
        "norms": {"total": snapshot.norm, "psi1": dens1, "psi2": dens2},
        "pi_momentum": snapshot.pi_momentum,
        "energy": snapshot.energy,
    }
    with open(base + ".json", "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")
    return base


def read_snapshot(path_base):
    """Inverse of write_snapshot; returns (SpinorField, f1, f2, sidecar)."""
    with open(path_base + ".json", encoding="utf-8") as fh:
        sidecar = json.load(fh)
    n = int(sidecar["grid"]["n"])
    raw = np.fromfile(path_base + ".bin", dtype="<c16")
    if raw.size != 4 * n:
        raise ValueError(
            f"{path_base}.bin holds {raw.size} complex values, expected {4 * n}"
        )
    grid = Grid(n_points=n, length=float(sidecar["grid"]["length"]))
    field = SpinorField(
        grid, raw[:n].copy(), raw[n : 2 * n].copy(), time=float(sidecar["time"])
    )
    return field, raw[2 * n : 3 * n].copy(), raw[3 * n :].copy(), sidecar
