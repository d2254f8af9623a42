"""The three local noise families and their action on states.

Shows the Kraus operators, verifies trace preservation, and contrasts the
Bloch-ball pictures: depolarizing shrinks uniformly, amplitude damping pulls
toward |0>, phase damping flattens the equator while preserving populations.
"""

import numpy as np

from qcorr import (
    BellDiagonalCoeffs,
    amplitude_damping,
    apply_local,
    bell_diagonal,
    bloch_action,
    depolarizing,
    extract_fano,
    phase_damping,
    phase_damping_at_time,
)

np.set_printoptions(precision=4, suppress=True)

for factory in (depolarizing, amplitude_damping, phase_damping):
    channel = factory(0.3)
    print(f"== {channel.label} (p = {channel.p}) ==")
    for i, op in enumerate(channel.ops):
        print(f"  Kraus operator {i}:")
        for row in op:
            print(f"    {row}")
    total = sum(op.conj().T @ op for op in channel.ops)
    print(f"  completeness defect: {np.max(np.abs(total - np.eye(2))):.2e}")
    m_mat, m_vec = bloch_action(channel)
    print(f"  Bloch action r -> M r + m with diag(M) = {np.diag(m_mat)}, m = {m_vec}")
    print()

# A plus state loses its coherence linearly in p under phase damping.
plus = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
print("phase damping on |+><+|: off-diagonal element vs p")
for p in (0.0, 0.25, 0.5, 0.75, 1.0):
    out = phase_damping(p).apply(plus)
    print(f"  p = {p:4.2f}: rho_01 = {out[0, 1].real:.4f}")
print()

# Two-sided dephasing on a Bell-diagonal state: c1, c2 decay, c3 is immune.
rho = bell_diagonal(BellDiagonalCoeffs(1.0, -0.6, 0.6))
print("two-sided dephasing of the (1, -0.6, 0.6) state at rate gamma = 1")
print(f"  {'t':>5s} {'c1':>8s} {'c2':>8s} {'c3':>8s}   expected c1 = exp(-2t)")
for t in (0.0, 0.25, 0.5, 1.0, 2.0):
    channel = phase_damping_at_time(1.0, t)
    diag = np.diag(extract_fano(apply_local(rho, channel, channel)).tensor)
    print(f"  {t:5.2f} {diag[0]:8.4f} {diag[1]:8.4f} {diag[2]:8.4f}   {np.exp(-2 * t):8.4f}")
