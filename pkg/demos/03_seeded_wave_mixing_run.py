"""A seeded wave-mixing run, end to end, at desk-demo resolution.

A strong pump on the upper branch plus a weak seed at the phase-matched
k2 = k1 + q generate a third wave at k3 = k1 - q.  The run below uses a
narrower packet and shorter time than the headline scenario so it
finishes in under a minute; the mechanism is identical.  Watch the k3
window fill while the norm stays frozen to ten significant digits.
"""

import numpy as np

from socfwm import (
    CONFIGURATIONS,
    SystemParams,
    WavepacketSpec,
    build_initial_state,
    default_window,
    efficiency,
    norm,
    propagate,
    solve_configuration,
    spectral_peaks,
)
from socfwm.scenarios import ScenarioConfig

p = SystemParams(alpha=3.0, omega_x=2.5, omega_z=4.0, g=0.8, g1=0.808, g2=0.792)
k1, width, t_final = -0.45, 20.0, 100.0

config = CONFIGURATIONS[0]
sol = next(s for s in solve_configuration(config, k1, p) if s.q > 0)
print(f"phase matching: q = {sol.q:.6f}, k2 = {sol.k2:.6f}, k3 = {sol.k3:.6f}")

scenario = ScenarioConfig(
    raw={
        "system": p.to_dict(),
        "configuration": 1,
        "pump": {"k1": k1, "amplitude": 1.0},
        "width": width,
        "seeds": [{"amplitude": 0.2, "side": "plus", "root_rank": 0}],
        "measure": [{"side": "minus", "root_rank": 0}],
        "grid": "auto",
        "run": {"t_final": t_final, "dt": 0.002, "snapshot_every": 12500},
    }
)
resolved = scenario.resolve()
grid = resolved.grid
print(f"auto grid: n = {grid.n_points}, length = {grid.length:.1f}")

field = build_initial_state(resolved.all_packets(), grid, p)
window = default_window(width, grid)
centers = [k1, sol.k2, sol.k3]
n0 = norm(field)
print(f"initial norm N = {n0:.6f}\n")

print("   t      N(k1)      N(k2)      N(k3)     norm drift")
final, snapshots = propagate(field, p, t_final, 0.002, snapshot_every=12500)
for snap in snapshots:
    pops = [pk.population for pk in spectral_peaks(snap.field, centers, window)]
    drift = abs(snap.norm - n0) / n0
    print(
        f"{snap.time:6.1f}  {pops[0]:9.4f}  {pops[1]:9.4f}  {pops[2]:9.4f}  {drift:10.2e}"
    )

eta = efficiency(field, final, sol.k3, window)
print(f"\nconversion efficiency into the k3 window: {eta:.3f}%")
assert eta > 0.1
