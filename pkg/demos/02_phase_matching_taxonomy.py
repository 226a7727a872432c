"""The four admissible mixing configurations and their root structure.

Degenerate wave mixing converts two pump quanta at k1 into probes at
k1 +- q.  Squaring the frequency-matching condition gives a cubic in
Q = q^2/alpha^2 shared by several branch assignments; back-substitution
into the unsquared condition sorts the roots into configurations.  This
script solves all four configurations at several operating points and
demonstrates the root bounds, the mirror symmetry between configurations
2 and 3, and the discriminant that counts real cubic roots.
"""

from socfwm import (
    CONFIGURATIONS,
    CubicProblem,
    SystemParams,
    discriminant,
    enumerate_all,
    matching_residual,
    solve_configuration,
)

POINTS = [
    ("config-1 run", SystemParams(alpha=3.0, omega_x=2.5, omega_z=4.0), -0.45),
    ("config-2 run", SystemParams(alpha=10.0, omega_x=3.0, omega_z=8.0), -0.26),
    ("config-4 run", SystemParams(alpha=7.0, omega_x=6.0, omega_z=4.0), -0.71),
    ("dual-root run", SystemParams(alpha=8.0, omega_x=2.5, omega_z=4.0), 1.35),
    ("weak SOC", SystemParams(alpha=2.0, omega_x=2.5, omega_z=8.0), 1.5),
]

for label, p, k1 in POINTS:
    print(f"--- {label}: alpha={p.alpha}, omega_x={p.omega_x}, omega_z={p.omega_z}, k1={k1}")
    for config in CONFIGURATIONS:
        problem = CubicProblem.from_pump(config.signs[0], k1, p)
        delta = discriminant(
            config.signs[0], problem.omega_tilde_scaled, problem.omega_z_scaled
        )
        sols = solve_configuration(config, k1, p)
        roots = ", ".join(f"{s.q:+.4f}" for s in sols) or "none"
        print(
            f"  config {config.id} signs={config.signs} "
            f"discriminant={delta:+.3e}  roots (max {config.n_max}): {roots}"
        )
        for s in sols:
            assert abs(matching_residual(k1, s.q, config.signs, p)) < 1e-9
    print()

# Mirror symmetry: negating q swaps the roles of the two probe branches.
p = SystemParams(alpha=10.0, omega_x=3.0, omega_z=8.0)
r2 = sorted(s.q for s in solve_configuration(CONFIGURATIONS[1], -0.26, p))
r3 = sorted(-s.q for s in solve_configuration(CONFIGURATIONS[2], -0.26, p))
print(f"config-2 roots     : {[f'{q:+.4f}' for q in r2]}")
print(f"config-3 mirrored  : {[f'{q:+.4f}' for q in r3]}")

print(f"\nzero Zeeman vector -> {len(enumerate_all(1.5, SystemParams(2.0, 0.0, 0.0)))} processes")
