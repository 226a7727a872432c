"""Rendering tests against shipped simulation outputs."""

import csv
import hashlib
import json
import os
import shutil

import numpy as np
import pytest

from socfwm_plots import InputError, SnapshotSeries
from socfwm_plots.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_dir(name):
    path = os.path.join(DATA, name)
    assert os.path.isdir(path), f"shipped data directory {name} is missing"
    return path


def tree_digest(path):
    digest = hashlib.sha256()
    for root, _, files in sorted(os.walk(path)):
        for name in sorted(files):
            digest.update(name.encode())
            with open(os.path.join(root, name), "rb") as fh:
                digest.update(fh.read())
    return digest.hexdigest()


def render(kind, in_dir, out_file):
    assert main([kind, "--in", in_dir, "--out", out_file]) == 0
    assert os.path.getsize(out_file) > 0


@pytest.mark.parametrize(
    "kind,source",
    [
        ("matching", "match_weak_soc"),
        ("matching", "match_strong_soc"),
        ("gv", "gv_config1"),
        ("evolution", "run_config1"),
        ("evolution", "run_dual"),
        ("efficiency", "efficiency_scan"),
    ],
)
def test_kind_renders_and_inputs_untouched(kind, source, tmp_path):
    src = data_dir(source)
    before = tree_digest(src)
    render(kind, src, str(tmp_path / f"{source}.png"))
    assert tree_digest(src) == before


def test_rendering_is_deterministic(tmp_path):
    src = data_dir("run_config1")
    a, b = str(tmp_path / "a.png"), str(tmp_path / "b.png")
    render("evolution", src, a)
    render("evolution", src, b)
    assert open(a, "rb").read() == open(b, "rb").read()
    pa, pb = str(tmp_path / "a.pdf"), str(tmp_path / "b.pdf")
    render("matching", data_dir("match_weak_soc"), pa)
    render("matching", data_dir("match_weak_soc"), pb)
    assert open(pa, "rb").read() == open(pb, "rb").read()


def test_evolution_requires_two_snapshots(tmp_path):
    src = data_dir("run_config1")
    single = tmp_path / "single"
    single.mkdir()
    for ext in (".bin", ".json"):
        shutil.copy(os.path.join(src, "snap_000000" + ext), single)
    code = main(["evolution", "--in", str(single), "--out", str(tmp_path / "x.png")])
    assert code == 2


def test_corrupt_binary_is_reported(tmp_path):
    src = data_dir("run_config1")
    broken = tmp_path / "broken"
    shutil.copytree(src, broken)
    with open(broken / "snap_000001.bin", "r+b") as fh:
        fh.truncate(100)
    with pytest.raises(InputError):
        SnapshotSeries(str(broken)).arrays(1)


def test_missing_inputs_are_reported(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    for kind in ("matching", "gv", "evolution", "efficiency"):
        assert main([kind, "--in", str(empty), "--out", str(tmp_path / "o.png")]) == 2
    assert main(["matching", "--in", str(empty), "--out", str(tmp_path / "o.gif")]) == 2


def test_empty_match_report_renders_without_markers(tmp_path):
    src = json.load(open(os.path.join(data_dir("match_weak_soc"), "match.json")))
    for entry in src["configurations"]:
        entry["solutions"] = []
    report_dir = tmp_path / "empty_report"
    report_dir.mkdir()
    json.dump(src, open(report_dir / "match.json", "w"))
    render("matching", str(report_dir), str(tmp_path / "empty.png"))


def test_efficiency_rows_with_gaps_render(tmp_path):
    gap_dir = tmp_path / "gaps"
    gap_dir.mkdir()
    with open(gap_dir / "efficiency.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["omega_z", "g", "g1", "g2", "eta_percent"])
        writer.writerow(["0.5", "0.8", "0.8", "0.8", "1.25"])
        writer.writerow(["1.0", "0.8", "0.8", "0.8", ""])  # failed point
        writer.writerow(["2.0", "0.8", "0.8", "0.8", "2.5"])
    render("efficiency", str(gap_dir), str(tmp_path / "gaps.png"))


def _count_humps(values, floor_fraction):
    """Local maxima above a floor, with shoulder suppression."""
    floor = floor_fraction * np.max(values)
    humps = 0
    rising = False
    last_peak = -10**9
    for i in range(1, len(values) - 1):
        if values[i] > values[i - 1]:
            rising = True
        elif values[i] < values[i - 1]:
            if rising and values[i - 1] > floor and i - last_peak > 3:
                humps += 1
                last_peak = i
            rising = False
    return humps


def test_config1_final_state_shows_three_separated_packets():
    series = SnapshotSeries(data_dir("run_config1"))
    m1, m2 = series.moduli_x(len(series) - 1)
    density = m1**2 + m2**2
    kernel = np.ones(25) / 25.0
    smooth = np.convolve(density, kernel, mode="same")
    assert _count_humps(smooth, 0.02) >= 3


def test_dual_process_final_state_shows_five_spectral_peaks():
    series = SnapshotSeries(data_dir("run_dual"))
    f1, f2 = series.moduli_k(len(series) - 1)
    spectrum = f1**2 + f2**2
    assert _count_humps(spectrum, 0.001) >= 5


def test_efficiency_multiple_data_sets_render_as_curves(tmp_path):
    multi = tmp_path / "multi"
    multi.mkdir()
    base = list(csv.DictReader(open(os.path.join(data_dir("efficiency_scan"), "efficiency.csv"))))
    for i, (g1, g2) in enumerate([(0.8, 0.8), (0.816, 0.784), (0.84, 0.76)]):
        with open(multi / f"curve{i}.csv", "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["omega_z", "g", "g1", "g2", "eta_percent"])
            for row in base:
                writer.writerow(
                    [row["omega_z"], row["g"], g1, g2, float(row["eta_percent"]) * (1 + i)]
                )
    render("efficiency", str(multi), str(tmp_path / "multi.png"))
