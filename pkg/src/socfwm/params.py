"""Physical parameters of the spin-orbit-coupled two-component condensate.

Dimensionless units with hbar = m = 1 throughout.  The single-particle
Hamiltonian is

    H = (1/2) * (-d^2/dx^2 + Omega.sigma - i*alpha*sigma_x*d/dx),

with the Zeeman vector restricted to the (x, z) plane,
Omega = (omega_x, 0, omega_z), and both components taken non-negative.
The mean-field interaction matrix is diagonal,

    G(Psi) = diag(g1*|Psi1|^2 + g*|Psi2|^2,  g*|Psi1|^2 + g2*|Psi2|^2),

and enters the equations of motion as i dPsi/dt = H Psi + (1/2) G Psi.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SystemParams:
    """Model constants: SOC strength, Zeeman components, and couplings.

    alpha    -- spin-orbit coupling strength
    omega_x  -- in-plane Zeeman component, >= 0
    omega_z  -- Zeeman splitting, >= 0
    g        -- inter-component interaction
    g1, g2   -- intra-component interactions
    """

    alpha: float
    omega_x: float
    omega_z: float
    g: float = 0.0
    g1: float = 0.0
    g2: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "omega_x", "omega_z", "g", "g1", "g2"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.omega_x < 0 or self.omega_z < 0:
            raise ValueError(
                "omega_x and omega_z must be non-negative "
                f"(got omega_x={self.omega_x}, omega_z={self.omega_z})"
            )

    @property
    def zeeman_is_zero(self):
        """True when the Zeeman vector vanishes entirely."""
        return self.omega_x == 0.0 and self.omega_z == 0.0

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "omega_x": self.omega_x,
            "omega_z": self.omega_z,
            "g": self.g,
            "g1": self.g1,
            "g2": self.g2,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(**{k: float(v) for k, v in d.items()})
