"""Tour of the linear spectral problem.

The two-component condensate with spin-orbit coupling alpha and Zeeman
vector (omega_x, 0, omega_z) has two dispersion branches

    mu_pm(k) = k^2/2 +- eps(k)/2,    eps(k) = sqrt(omega_z^2 + (alpha k + omega_x)^2).

This script prints the branch structure at one operating point, checks the
eigenspinors against the 2x2 Hamiltonian, and tabulates group velocities,
including the regime where both probe waves outrun the pump.
"""

import numpy as np

from socfwm import (
    CONFIGURATIONS,
    SystemParams,
    eigenspinor,
    epsilon,
    group_velocity,
    hamiltonian_matrix,
    mu,
    solve_configuration,
)

p = SystemParams(alpha=3.0, omega_x=2.5, omega_z=4.0)
print(f"system: alpha={p.alpha}, omega_x={p.omega_x}, omega_z={p.omega_z}")
print(f"gap at k=0: eps = {epsilon(0.0, p):.4f} (never below omega_z = {p.omega_z})\n")

print(" k      mu_-      mu_+      eps      v_-      v_+")
for k in np.linspace(-3, 3, 13):
    print(
        f"{k:5.2f}  {mu(k, -1, p):8.4f}  {mu(k, +1, p):8.4f}  "
        f"{epsilon(k, p):7.4f}  {group_velocity(k, -1, p):7.4f}  {group_velocity(k, +1, p):7.4f}"
    )

print("\neigenspinor check at k = -0.45 (upper branch):")
mode = eigenspinor(-0.45, +1, p)
h = hamiltonian_matrix(-0.45, p)
residual = np.linalg.norm(h @ mode.spinor - mode.mu * mode.spinor)
print(f"  spinor = {np.round(mode.spinor.real, 6)}, mu = {mode.mu:.6f}")
print(f"  ||H psi - mu psi|| = {residual:.2e}")

# Probe waves can both move faster than the pump near zero pump momentum.
p2 = SystemParams(alpha=10.0, omega_x=3.0, omega_z=8.0)
k1 = -0.26
config2 = CONFIGURATIONS[1]
print(f"\nfast-probe regime (alpha={p2.alpha}, omega_x={p2.omega_x}, omega_z={p2.omega_z}, k1={k1}):")
v_pump = group_velocity(k1, +1, p2)
print(f"  pump group velocity: {v_pump:+.4f}")
for sol in solve_configuration(config2, k1, p2):
    v2 = group_velocity(sol.k2, config2.signs[1], p2)
    v3 = group_velocity(sol.k3, config2.signs[2], p2)
    print(
        f"  q={sol.q:+.4f}: probes at k2={sol.k2:+.4f} (v={v2:+.4f}), "
        f"k3={sol.k3:+.4f} (v={v3:+.4f})"
    )
