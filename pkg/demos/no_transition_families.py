"""Families that never show the sudden transition.

Pure Schmidt states keep their classical correlation pinned at the reduced
entropy for all times while discord decays from the start; Werner states do
the same with C frozen at P[beta] + P[-beta].  In both cases the transition
detector correctly reports nothing.  For Werner states the module also
evaluates a printed closed-form discord expression side by side with the
optimizer value: the two are reported, not asserted, and the closed form
leaves its domain entirely for strong mixing at early times.
"""

import numpy as np

from qcorr import (
    Scenario,
    detect_transition,
    evolve_trajectory,
    werner_discord_comparison,
)

for theta, label in ((np.pi / 6, "pi/6"), (np.pi / 4, "pi/4"), (np.pi / 3, "pi/3")):
    traj = evolve_trajectory(Scenario.pure(theta, n_points=201))
    result = detect_transition(traj)
    c = traj.classical
    d = traj.discord
    print(
        f"pure Schmidt theta = {label:4s}: C constant at {c[0]:.6f} "
        f"(spread {c.max() - c.min():.1e}), D falls {d[0]:.6f} -> {d[-1]:.6f}, "
        f"transition detected: {result.detected_t}"
    )
print()

for beta in (0.4, 0.8):
    traj = evolve_trajectory(Scenario.werner(beta, n_points=201))
    result = detect_transition(traj)
    c = traj.classical
    d = traj.discord
    print(
        f"Werner beta = {beta}: C constant at {c[0]:.6f} "
        f"(spread {c.max() - c.min():.1e}), D falls {d[0]:.6f} -> {d[-1]:.6f}, "
        f"transition detected: {result.detected_t}"
    )
print()

print("Werner discord: optimizer vs printed closed form (beta = 0.25)")
print(f"{'t':>5s} {'optimizer':>12s} {'closed form':>12s} {'|gap|':>10s}")
for record in werner_discord_comparison(0.25, 1.0, np.linspace(0.0, 2.0, 9)):
    print(
        f"{record['t']:5.2f} {record['discord_engine']:12.8f} "
        f"{record['discord_formula']:12.8f} {record['difference']:10.2e}"
    )
print()
print("same comparison at beta = 0.8: the closed form is out of domain early on")
for record in werner_discord_comparison(0.8, 1.0, [0.0, 0.25, 0.5, 1.0, 2.0]):
    formula = (
        "out of domain"
        if record["domain_error"]
        else f"{record['discord_formula']:.8f}"
    )
    print(f"  t = {record['t']:4.2f}: optimizer {record['discord_engine']:.8f}, closed form {formula}")
