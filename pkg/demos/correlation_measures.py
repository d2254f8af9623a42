"""Correlation measures on representative two-qubit states.

Walks through the basic API: build a state, ask for its quantum mutual
information I, classical correlation C, discord D = I - C, and the
complementary-correlation value obtained by measuring two mutually unbiased
observables on both qubits.
"""

import numpy as np

from qcorr import (
    BellDiagonalCoeffs,
    MeasurementDirection,
    bell_diagonal,
    classify_by_complementary_correlations,
    complementary_correlation,
    discord,
    random_density_matrix,
    random_qc_state,
    schmidt_pure,
    werner,
)

X, Z = MeasurementDirection.x(), MeasurementDirection.z()

rng = np.random.default_rng(2024)

states = {
    "maximally entangled |phi+>": bell_diagonal(BellDiagonalCoeffs(1.0, -1.0, 1.0)),
    "classically correlated (c3 = 1)": bell_diagonal(BellDiagonalCoeffs(0.0, 0.0, 1.0)),
    "Bell diagonal (1, -0.6, 0.6)": bell_diagonal(BellDiagonalCoeffs(1.0, -0.6, 0.6)),
    "Werner, singlet fraction 0.8": werner(0.8),
    "pure Schmidt state, theta = pi/6": schmidt_pure(np.pi / 6),
    "random quantum-classical state": random_qc_state(rng)[0],
    "random full-rank state": random_density_matrix(rng),
}

print(f"{'state':36s} {'I':>9s} {'C':>9s} {'D':>9s} {'Icomp':>9s}  classification")
print("-" * 100)
for name, rho in states.items():
    report = discord(rho)
    icomp = complementary_correlation(rho, X, Z)
    label = classify_by_complementary_correlations(min(icomp, 2.0))
    print(
        f"{name:36s} {report.mutual_info:9.6f} {report.classical:9.6f} "
        f"{report.discord:9.6f} {icomp:9.6f}  {label.value}"
    )

# The optimizer also reports which measurement axis achieves C.
report = discord(bell_diagonal(BellDiagonalCoeffs(1.0, -0.6, 0.6)))
print()
print(
    "optimal measurement axis for the (1, -0.6, 0.6) state:",
    np.round(report.direction.unit_vector, 6),
)
print("(the dominant tensor coefficient c1 lives on the x axis)")
