"""Linear spectral problem of the SOC Hamiltonian.

In Fourier space the single-particle Hamiltonian is the 2x2 matrix

    H(k) = (k^2/2) I + (1/2) Wt(k) sigma_x + (1/2) omega_z sigma_z,

where Wt(k) = alpha*k + omega_x.  Its eigenvalues form two dispersion
branches mu_pm(k) = k^2/2 +- eps(k)/2 separated by the local gap
eps(k) = sqrt(omega_z^2 + Wt(k)^2), with real eigenspinors since H(k)
is real symmetric for an in-plane Zeeman field.
"""

from dataclasses import dataclass

import numpy as np

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


class DegenerateDispersion(ValueError):
    """Group velocity requested where the two branches touch (eps(k) = 0)."""


@dataclass(frozen=True)
class Mode:
    """One plane-wave eigenmode: exp(i k x - i mu t) times a unit spinor."""

    k: float
    branch: int
    mu: float
    spinor: np.ndarray


def _check_branch(branch):
    if branch not in (+1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch!r}")


def omega_tilde(k, p):
    """Effective in-plane field Wt(k) = alpha*k + omega_x."""
    return p.alpha * np.asarray(k, dtype=float) + p.omega_x


def epsilon(k, p):
    """Gap eps(k) = sqrt(omega_z^2 + Wt(k)^2) between the two branches."""
    return np.hypot(p.omega_z, omega_tilde(k, p))


def mu(k, branch, p):
    """Branch frequency mu_pm(k) = k^2/2 +- eps(k)/2."""
    _check_branch(branch)
    k = np.asarray(k, dtype=float)
    return 0.5 * k * k + 0.5 * branch * epsilon(k, p)


def group_velocity(k, branch, p):
    """d(mu_pm)/dk = k +- alpha*Wt(k) / (2 eps(k)).

    The chain rule brings a factor alpha with dWt/dk; consistency with
    centered differences of mu() is asserted in the test suite.  Undefined
    where eps(k) = 0 (possible only for omega_z = 0 at Wt(k) = 0).
    """
    _check_branch(branch)
    k = np.asarray(k, dtype=float)
    wt = omega_tilde(k, p)
    eps = np.hypot(p.omega_z, wt)
    if np.any(eps == 0.0):
        raise DegenerateDispersion(
            "group velocity undefined at a branch-touching point (eps(k) = 0)"
        )
    return k + branch * p.alpha * wt / (2.0 * eps)


def hamiltonian_matrix(k, p):
    """The 2x2 Fourier-space Hamiltonian H(k); Hermitian, trace k^2."""
    k = float(k)
    wt = p.alpha * k + p.omega_x
    h = 0.5 * k * k * np.eye(2, dtype=complex)
    h += 0.5 * wt * SIGMA_X + 0.5 * p.omega_z * SIGMA_Z
    return h


def eigenspinor(k, branch, p):
    """Normalized eigenspinor of H(k) on the requested branch, as a Mode.

    The raw eigenvector is (Wt, +-eps - omega_z) up to normalization.  At
    Wt(k) = 0 the upper-branch expression degenerates to 0/0 and the
    Wt -> 0 limit is substituted: psi_+ = (1, 0), psi_- = (0, -1) for
    omega_z > 0.  Elsewhere the global phase is fixed by making the first
    nonzero component real and positive.
    """
    _check_branch(branch)
    k = float(k)
    wt = p.alpha * k + p.omega_x
    eps = np.hypot(p.omega_z, wt)
    if wt == 0.0:
        # Removable singularity of the closed form; continuity limit.
        vec = np.array([1.0, 0.0]) if branch > 0 else np.array([0.0, -1.0])
    else:
        vec = np.array([wt, branch * eps - p.omega_z])
        vec /= np.linalg.norm(vec)
        if vec[0] < 0.0:
            vec = -vec
    return Mode(k=k, branch=branch, mu=float(mu(k, branch, p)), spinor=vec.astype(complex))
