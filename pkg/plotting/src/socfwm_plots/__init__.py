"""Static figure rendering for fwm simulation and solver outputs."""

from .figures import plot_efficiency, plot_evolution, plot_gv, plot_matching
from .io import InputError, SnapshotSeries

__all__ = [
    "InputError",
    "SnapshotSeries",
    "plot_efficiency",
    "plot_evolution",
    "plot_gv",
    "plot_matching",
]

__version__ = "0.1.0"
