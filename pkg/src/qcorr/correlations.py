"""Correlation measures for two-qubit states.

Quantum mutual information, Henderson-Vedral classical correlation (with the
projective-measurement optimizer), quantum discord, measurement-outcome
mutual information, complementary correlations and the entanglement
classifier built on them.

The optimizer searches rank-1 projective measurements only.  Its default
measured side is B; passing ``measured_side="A"`` flips the roles, which
matters because classical correlation and discord are asymmetric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize

from .errors import ComplementarityError, ParameterError
from .linalg import (
    IDENTITY_2,
    PAULIS,
    partial_trace,
    tensor_product,
    von_neumann_entropy,
)
from .states import DensityMatrix, extract_fano

COARSE_GRID = (64, 128)  # (theta, phi) resolution of the optimizer's first stage
_NEGLIGIBLE_PROB = 1e-12
_TIE_ATOL = 1e-9


class EntanglementClass(str, Enum):
    MAXIMALLY_ENTANGLED = "maximally-entangled"
    ENTANGLED = "entangled"
    CLASSICAL_BOUNDARY = "at-classical-boundary"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MeasurementDirection:
    """Bloch unit vector, stored as polar angles ``theta`` in [0, pi], ``phi`` in [0, 2 pi).

    Defines the projector pair ``(I +- n.sigma) / 2``.  Arbitrary input
    angles are canonicalized through the unit vector they describe; at the
    poles ``phi`` is fixed to 0.
    """

    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ParameterError("angles must be finite")
        st = math.sin(theta)
        n = (st * math.cos(phi), st * math.sin(phi), math.cos(theta))
        theta_c = math.acos(max(-1.0, min(1.0, n[2])))
        phi_c = math.atan2(n[1], n[0]) % (2 * math.pi) if abs(st) > 1e-15 else 0.0
        object.__setattr__(self, "theta", theta_c)
        object.__setattr__(self, "phi", phi_c)

    @classmethod
    def from_vector(cls, v) -> "MeasurementDirection":
        v = np.asarray(v, dtype=float)
        norm = np.linalg.norm(v)
        if norm < 1e-15:
            raise ParameterError("cannot build a direction from the zero vector")
        v = v / norm
        return cls(theta=math.acos(max(-1.0, min(1.0, v[2]))), phi=math.atan2(v[1], v[0]))

    @classmethod
    def x(cls) -> "MeasurementDirection":
        return cls(theta=math.pi / 2, phi=0.0)

    @classmethod
    def y(cls) -> "MeasurementDirection":
        return cls(theta=math.pi / 2, phi=math.pi / 2)

    @classmethod
    def z(cls) -> "MeasurementDirection":
        return cls(theta=0.0, phi=0.0)

    @property
    def unit_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.unit_vector
        n_sigma = n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2]
        return (IDENTITY_2 + n_sigma) / 2, (IDENTITY_2 - n_sigma) / 2


@dataclass(frozen=True)
class CorrelationReport:
    """All correlation measures of one state, in bits.

    ``discord = mutual_info - classical`` by construction; the report
    validates the basic inequalities at creation.
    """

    mutual_info: float
    classical: float
    discord: float
    direction: MeasurementDirection
    complementary: float | None = None

    def __post_init__(self):
        if abs(self.discord - (self.mutual_info - self.classical)) > _TIE_ATOL:
            raise ValueError("discord must equal mutual_info - classical")
        if min(self.mutual_info, self.classical, self.discord) < -_TIE_ATOL:
            raise ValueError("correlation measures must be nonnegative")
        if self.mutual_info > 2 + _TIE_ATOL or self.classical > self.mutual_info + _TIE_ATOL:
            raise ValueError("correlation measures violate their upper bounds")


def mutual_information(rho: DensityMatrix) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB), the total correlation in bits."""
    return (
        von_neumann_entropy(rho.reduced("A"))
        + von_neumann_entropy(rho.reduced("B"))
        - von_neumann_entropy(rho.mat)
    )


def conditional_entropy_after_measurement(
    rho: DensityMatrix,
    direction: MeasurementDirection,
    measured_side: str = "B",
) -> float:
    """Average entropy of the unmeasured qubit after projecting the other.

    Direct matrix route: builds the projectors, conditions the state on each
    outcome and sums ``p_j S(rho^j)``.  Outcomes with probability below 1e-12
    contribute nothing.
    """
    if measured_side not in ("A", "B"):
        raise ParameterError(f"measured_side must be 'A' or 'B', got {measured_side!r}")
    kept = "A" if measured_side == "B" else "B"
    total = 0.0
    for proj in direction.projectors():
        op = (
            tensor_product(IDENTITY_2, proj)
            if measured_side == "B"
            else tensor_product(proj, IDENTITY_2)
        )
        p = float(np.real(np.trace(rho.mat @ op)))
        if p < _NEGLIGIBLE_PROB:
            continue
        conditioned = partial_trace(op @ rho.mat @ op, kept) / p
        total += p * von_neumann_entropy(conditioned)
    return total


def _oriented_bloch(rho: DensityMatrix, measured_side: str):
    """(kept Bloch vector, measured Bloch vector, tensor mapping measured axis)."""
    f = extract_fano(rho)
    if measured_side == "B":
        return f.a, f.b, f.tensor
    if measured_side == "A":
        return f.b, f.a, f.tensor.T
    raise ParameterError(f"measured_side must be 'A' or 'B', got {measured_side!r}")


def _conditional_entropy_many(a, b, tensor, normals: np.ndarray) -> np.ndarray:
    """Vectorized conditional entropy for measurement axes ``normals`` (N, 3).

    Uses the Bloch-space form: outcome probabilities ``(1 +- b.n)/2`` and
    conditional Bloch vectors ``(a +- T n) / (1 +- b.n)``.
    """
    bn = normals @ b
    tn = normals @ tensor.T
    out = np.zeros(len(normals))
    for sign in (1.0, -1.0):
        p = (1 + sign * bn) / 2
        r = np.linalg.norm(a[None, :] + sign * tn, axis=1) / np.maximum(2 * p, 1e-300)
        q = (1 + np.minimum(r, 1.0)) / 2
        h = np.zeros_like(q)
        inner = (q > 0) & (q < 1)
        qi = q[inner]
        h[inner] = -qi * np.log2(qi) - (1 - qi) * np.log2(1 - qi)
        out += np.where(p > _NEGLIGIBLE_PROB, p * h, 0.0)
    return out


def _conditional_entropy_objective(a, b, tensor):
    """Scalar (theta, phi) -> conditional entropy, in plain floats for speed."""
    a0, a1, a2 = (float(v) for v in a)
    b0, b1, b2 = (float(v) for v in b)
    (t00, t01, t02), (t10, t11, t12), (t20, t21, t22) = (
        (float(v) for v in row) for row in tensor
    )
    log2 = math.log2

    def objective(x):
        theta, phi = x
        st = math.sin(theta)
        nx, ny, nz = st * math.cos(phi), st * math.sin(phi), math.cos(theta)
        bn = b0 * nx + b1 * ny + b2 * nz
        tx = t00 * nx + t01 * ny + t02 * nz
        ty = t10 * nx + t11 * ny + t12 * nz
        tz = t20 * nx + t21 * ny + t22 * nz
        total = 0.0
        for sign in (1.0, -1.0):
            p = (1 + sign * bn) / 2
            if p < _NEGLIGIBLE_PROB:
                continue
            vx = (a0 + sign * tx) / (2 * p)
            vy = (a1 + sign * ty) / (2 * p)
            vz = (a2 + sign * tz) / (2 * p)
            r = math.sqrt(vx * vx + vy * vy + vz * vz)
            q = (1 + r) / 2
            if q >= 1.0:
                continue  # pure conditional state, zero entropy
            total += p * (-q * log2(q) - (1 - q) * log2(1 - q))
        return total

    return objective


@lru_cache(maxsize=4)
def _grid(n_theta: int, n_phi: int):
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, 2 * math.pi, n_phi, endpoint=False)
    th, ph = np.meshgrid(thetas, phis, indexing="ij")
    st = np.sin(th)
    normals = np.stack([st * np.cos(ph), st * np.sin(ph), np.cos(th)], axis=-1)
    return normals.reshape(-1, 3), th.ravel(), ph.ravel()


def _canonical_direction(n: np.ndarray, tol: float = 1e-6) -> MeasurementDirection:
    """Snap the +-n ambiguity of a projector pair to one hemisphere."""
    n = np.asarray(n, dtype=float)
    n = n / np.linalg.norm(n)
    if n[2] < -tol:
        n = -n
    elif abs(n[2]) <= tol:
        if n[0] < -tol:
            n = -n
        elif abs(n[0]) <= tol and n[1] < 0:
            n = -n
    return MeasurementDirection.from_vector(n)


def classical_correlation(
    rho: DensityMatrix, measured_side: str = "B"
) -> tuple[float, MeasurementDirection]:
    """Maximal entropy reduction of one qubit by projectively measuring the other.

    Two-stage search over the measurement sphere: a deterministic 64x128
    coarse grid followed by Nelder-Mead refinement restarted from the three
    best grid cells.  Ties are broken toward the smallest ``(theta, phi)``.
    Returns the maximum in bits and the maximizing direction.
    """
    kept_bloch, meas_bloch, tensor = _oriented_bloch(rho, measured_side)
    kept_entropy = von_neumann_entropy(
        rho.reduced("A" if measured_side == "B" else "B")
    )

    normals, thetas, phis = _grid(*COARSE_GRID)
    values = _conditional_entropy_many(kept_bloch, meas_bloch, tensor, normals)
    top = np.argsort(values, kind="stable")[:3]

    objective = _conditional_entropy_objective(kept_bloch, meas_bloch, tensor)
    d_theta = math.pi / (COARSE_GRID[0] - 1)
    d_phi = 2 * math.pi / COARSE_GRID[1]

    candidates = []
    for idx in top:
        x0 = np.array([thetas[idx], phis[idx]])
        simplex = np.array([x0, x0 + [d_theta, 0.0], x0 + [0.0, d_phi]])
        result = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "xatol": 1e-6,
                "fatol": 1e-8,
                "initial_simplex": simplex,
                "maxiter": 400,
                "maxfev": 400,
            },
        )
        if float(result.fun) <= float(values[idx]):
            value, (theta, phi) = float(result.fun), (float(result.x[0]), float(result.x[1]))
        else:  # refinement never worsens the start, but keep the guard cheap
            value, (theta, phi) = float(values[idx]), (float(thetas[idx]), float(phis[idx]))
        st = math.sin(theta)
        direction = _canonical_direction(
            [st * math.cos(phi), st * math.sin(phi), math.cos(theta)]
        )
        candidates.append((value, direction))

    best_value = min(value for value, _ in candidates)
    eligible = [d for value, d in candidates if value <= best_value + _TIE_ATOL]
    direction = min(eligible, key=lambda d: (d.theta, d.phi))
    correlation = kept_entropy - best_value
    if correlation < 0:
        correlation = 0.0 if correlation > -_TIE_ATOL else correlation
    return correlation, direction


def classical_correlation_grid(
    rho: DensityMatrix,
    n_theta: int,
    n_phi: int,
    measured_side: str = "B",
) -> float:
    """Brute-force reference: exhaustive maximum over an (n_theta x n_phi) grid."""
    kept_bloch, meas_bloch, tensor = _oriented_bloch(rho, measured_side)
    kept_entropy = von_neumann_entropy(
        rho.reduced("A" if measured_side == "B" else "B")
    )
    normals, _, _ = _grid(n_theta, n_phi)
    values = _conditional_entropy_many(kept_bloch, meas_bloch, tensor, normals)
    return max(kept_entropy - float(values.min()), 0.0)


def discord(rho: DensityMatrix, measured_side: str = "B") -> CorrelationReport:
    """Quantum discord: total minus classical correlation.

    The measurement optimization runs on ``measured_side``; negative results
    within 1e-9 (optimizer round-off) are reported as exactly zero.
    """
    total = mutual_information(rho)
    classical, direction = classical_correlation(rho, measured_side)
    gap = total - classical
    if -_TIE_ATOL <= gap < 0.0:
        gap = 0.0
    return CorrelationReport(
        mutual_info=total, classical=classical, discord=gap, direction=direction
    )


def p_function(alpha: float) -> float:
    """``(1 + alpha)/2 * log2(1 + alpha)``, the building block of the closed forms."""
    if not -1.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha={alpha!r} outside [-1, 1]")
    if alpha <= -1.0:
        return 0.0
    return (1 + alpha) / 2 * math.log2(1 + alpha)


def measurement_mutual_information(
    rho: DensityMatrix,
    direction_a: MeasurementDirection,
    direction_b: MeasurementDirection,
) -> float:
    """Classical mutual information of the outcome pair of two local projective measurements."""
    proj_a = direction_a.projectors()
    proj_b = direction_b.projectors()
    joint = np.empty((2, 2))
    for i, pa in enumerate(proj_a):
        for j, pb in enumerate(proj_b):
            joint[i, j] = float(np.real(np.trace(rho.mat @ tensor_product(pa, pb))))
    joint = np.clip(joint, 0.0, None)
    joint /= joint.sum()
    value = (
        _entropy(joint.sum(axis=1)) + _entropy(joint.sum(axis=0)) - _entropy(joint.ravel())
    )
    return max(value, 0.0)


def _entropy(p: np.ndarray) -> float:
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum())


def complementary_correlation(
    rho: DensityMatrix,
    axis_1: MeasurementDirection,
    axis_2: MeasurementDirection,
) -> float:
    """Sum of outcome mutual informations for two complementary observables.

    Each axis is measured identically on both qubits; the two axes must be
    orthogonal Bloch directions (mutually unbiased qubit bases).
    """
    overlap = abs(float(axis_1.unit_vector @ axis_2.unit_vector))
    if overlap > 1e-9:
        raise ComplementarityError(
            f"axes are not complementary (|n1.n2| = {overlap:.3e})"
        )
    return measurement_mutual_information(rho, axis_1, axis_1) + measurement_mutual_information(
        rho, axis_2, axis_2
    )


def classify_by_complementary_correlations(icomp: float) -> EntanglementClass:
    """Entanglement classification from a complementary-correlation value.

    For qubits: >= 2 means maximally entangled, > 1 entangled, = 1 the
    classical boundary, anything below is inconclusive (all with 1e-9 slack).
    """
    if not -1e-9 <= icomp <= 2 + 1e-9:
        raise ParameterError(f"icomp={icomp!r} outside [0, 2]")
    if icomp >= 2 - 1e-9:
        return EntanglementClass.MAXIMALLY_ENTANGLED
    if icomp > 1 + 1e-9:
        return EntanglementClass.ENTANGLED
    if abs(icomp - 1) <= 1e-9:
        return EntanglementClass.CLASSICAL_BOUNDARY
    return EntanglementClass.INCONCLUSIVE
