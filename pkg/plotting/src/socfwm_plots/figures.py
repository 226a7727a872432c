"""Figure renderers for the four CLI data products.

All rendering is read-only and deterministic: a fixed style context, no
timestamps in the output metadata, and input files are never touched.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import InputError, SnapshotSeries, load_efficiency_tables, load_gv_table, load_match_report

STYLE = {
    "figure.dpi": 110,
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.25,
    "lines.linewidth": 1.4,
    "svg.hashsalt": "socfwm",
}

CONFIG_COLORS = {1: "tab:red", 2: "tab:pink", 3: "black", 4: "tab:brown"}


def _save(fig, out_file):
    # The PDF backend stamps a creation date unless told otherwise.
    metadata = {"CreationDate": None} if out_file.endswith(".pdf") else None
    fig.savefig(out_file, metadata=metadata)
    plt.close(fig)


def plot_matching(in_dir, out_file):
    """Quadratic left-hand side against per-configuration right-hand sides."""
    report = load_match_report(in_dir)
    scan = report["scan"]
    q = np.asarray(scan["q"], dtype=float)
    lhs = np.asarray(scan["lhs"], dtype=float)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        ax.plot(q, lhs, "b--", label="2 q$^2$")
        for entry in report["configurations"]:
            cid = entry["config"]
            rhs = np.asarray(scan["rhs"][str(cid)], dtype=float)
            color = CONFIG_COLORS.get(cid, None)
            ax.plot(q, rhs, color=color, label=f"config {cid}")
            for sol in entry["solutions"]:
                ax.plot([sol["q"]], [2.0 * sol["q"] ** 2], "o", ms=6, mfc="none", color=color)
        ax.set_xlabel("q")
        ax.set_ylabel("matching condition sides")
        ax.set_title(f"phase matching at k1 = {report['k1']}")
        ax.legend(loc="upper center", ncol=3, fontsize=8)
        span = float(np.max(lhs))
        ax.set_ylim(-0.15 * span, 1.1 * span)
        fig.tight_layout()
        _save(fig, out_file)
    return out_file


def plot_gv(in_dir, out_file):
    """Pump and probe group velocities versus pump momentum."""
    rows = load_gv_table(in_dir)
    by_config = {}
    for row in rows:
        by_config.setdefault(int(row["config"]), []).append(row)
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(
            1, len(by_config), figsize=(4.0 * len(by_config), 3.6), squeeze=False
        )
        for ax, (cid, entries) in zip(axes[0], sorted(by_config.items())):
            k1 = np.array([float(r["k1"]) for r in entries])
            v_pump = np.array(
                [float(r["v_pump"]) if r["v_pump"] else np.nan for r in entries]
            )
            probe2 = np.array([float(r["v_probe2"]) if r["q"] else np.nan for r in entries])
            probe3 = np.array([float(r["v_probe3"]) if r["q"] else np.nan for r in entries])
            ax.plot(k1, v_pump, color="tab:red", lw=2.2, label="pump")
            ax.plot(k1, probe2, "k.", ms=3, label="probe at k1+q")
            ax.plot(k1, probe3, "k+", ms=4, label="probe at k1-q")
            ax.set_title(f"configuration {cid}")
            ax.set_xlabel("k1")
            ax.set_ylabel("group velocity")
            ax.legend(fontsize=7)
        fig.tight_layout()
        _save(fig, out_file)
    return out_file


def plot_evolution(in_dir, out_file):
    """Initial/final overlays in x and k per component, with history insets."""
    series = SnapshotSeries(in_dir)
    if len(series) < 2:
        raise InputError(
            f"evolution plot needs at least two snapshots, found {len(series)}"
        )
    maps = series.history_maps()
    x = series.x
    k = series.k_shifted
    first, last = 0, len(series) - 1
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(2, 2, figsize=(9.2, 6.4))
        panels = (
            (axes[0, 0], x, series.moduli_x, 0, maps["x1"], "x", "|psi1|"),
            (axes[0, 1], k, series.moduli_k, 0, maps["k1"], "k", "|phi1|"),
            (axes[1, 0], x, series.moduli_x, 1, maps["x2"], "x", "|psi2|"),
            (axes[1, 1], k, series.moduli_k, 1, maps["k2"], "k", "|phi2|"),
        )
        extent_t = (series.times[0], series.times[-1])
        for ax, axis, getter, comp, history, xlabel, ylabel in panels:
            ax.plot(axis, getter(first)[comp], color="tab:blue", label=f"t={series.times[first]:g}")
            ax.plot(axis, getter(last)[comp], color="tab:red", label=f"t={series.times[last]:g}")
            ax.set_xlabel(xlabel)
            ax.set_ylabel(ylabel)
            ax.legend(fontsize=7, loc="upper right")
            inset = ax.inset_axes([0.02, 0.55, 0.35, 0.42])
            inset.imshow(
                history,
                aspect="auto",
                origin="lower",
                extent=(axis[0], axis[-1], extent_t[0], extent_t[1]),
                cmap="magma",
            )
            inset.tick_params(labelsize=5)
        fig.tight_layout()
        _save(fig, out_file)
    return out_file


def plot_efficiency(in_dir, out_file):
    """Efficiency versus Zeeman splitting, one curve per (g, dg) data set."""
    tables = load_efficiency_tables(in_dir)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        inset = ax.inset_axes([0.55, 0.55, 0.42, 0.4])
        small_cut = None
        for path, rows in sorted(tables.items()):
            omega_z = np.array([float(r["omega_z"]) for r in rows])
            eta = np.array(
                [float(r["eta_percent"]) if r["eta_percent"] else np.nan for r in rows]
            )
            g = float(rows[0]["g"])
            dg = 0.5 * (float(rows[0]["g1"]) - float(rows[0]["g2"]))
            label = f"g={g:g}, dg/g={dg / g:g}" if g else f"dg={dg:g}"
            ax.plot(omega_z, eta, "o-", ms=4, label=label)
            inset.plot(omega_z, eta, "o-", ms=3)
            cut = omega_z.min() + 0.25 * (omega_z.max() - omega_z.min())
            small_cut = cut if small_cut is None else min(small_cut, cut)
        ax.set_xlabel("omega_z")
        ax.set_ylabel("efficiency [%]")
        ax.legend(fontsize=8)
        inset.set_xlim(0, small_cut)
        inset.tick_params(labelsize=6)
        inset.set_title("small splitting", fontsize=7)
        fig.tight_layout()
        _save(fig, out_file)
    return out_file
