"""Degenerate four-wave mixing in quasi-1D spin-orbit-coupled condensates.

An analytical phase-matching solver (branch taxonomy, cubic roots,
group-velocity analysis) and a split-step spectral integrator for the
coupled Gross-Pitaevskii equations, with wavepacket diagnostics.
"""

from .dispersion import (
    DegenerateDispersion,
    Mode,
    epsilon,
    eigenspinor,
    group_velocity,
    hamiltonian_matrix,
    mu,
    omega_tilde,
)
from .params import SystemParams
from .phase_matching import (
    CONFIGURATIONS,
    AlphaZero,
    Configuration,
    CubicProblem,
    FwmSolution,
    cubic_coefficients,
    discriminant,
    enumerate_all,
    matching_residual,
    oracle_scan,
    solve_configuration,
)
from .propagation import (
    Grid,
    NaNEncountered,
    PlanMismatch,
    Snapshot,
    SpinorField,
    StepPlan,
    energy,
    linear_half_step,
    nonlinear_step,
    propagate,
)
from .wavepackets import (
    GridTooCoarse,
    OverlappingWindows,
    SpectralPeak,
    WavepacketSpec,
    build_initial_state,
    default_window,
    efficiency,
    norm,
    pi_momentum,
    spectral_norm,
    spectral_peaks,
)

__all__ = [
    "AlphaZero",
    "CONFIGURATIONS",
    "Configuration",
    "CubicProblem",
    "DegenerateDispersion",
    "FwmSolution",
    "Grid",
    "GridTooCoarse",
    "Mode",
    "NaNEncountered",
    "OverlappingWindows",
    "PlanMismatch",
    "Snapshot",
    "SpectralPeak",
    "SpinorField",
    "StepPlan",
    "SystemParams",
    "WavepacketSpec",
    "build_initial_state",
    "cubic_coefficients",
    "default_window",
    "discriminant",
    "efficiency",
    "eigenspinor",
    "energy",
    "enumerate_all",
    "epsilon",
    "group_velocity",
    "hamiltonian_matrix",
    "linear_half_step",
    "matching_residual",
    "mu",
    "nonlinear_step",
    "norm",
    "omega_tilde",
    "oracle_scan",
    "pi_momentum",
    "propagate",
    "solve_configuration",
    "spectral_norm",
    "spectral_peaks",
]

__version__ = "0.1.0"
