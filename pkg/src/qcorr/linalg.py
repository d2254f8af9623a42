"""Dense complex linear algebra for one- and two-qubit operators.

Everything here works on plain ``numpy`` arrays.  The public routines are
sized for the 2x2 and 4x4 matrices used elsewhere in the package, but are
written dimension-generically.  All logarithms are base 2, so entropies are
in bits.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, DistributionError, NotAStateError, NotHermitianError

HERMITICITY_ATOL = 1e-10
EIGENVALUE_CLAMP = -1e-10  # eigenvalues above this are treated as numerical noise

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices; output dims are the products."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise DimensionError("tensor_product expects two 2-d matrices")
    return np.kron(a, b)


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Trace out one qubit of a 4x4 two-qubit operator.

    ``keep`` selects the surviving subsystem, ``"A"`` (first tensor factor)
    or ``"B"`` (second).  The trace of the output equals the trace of the
    input.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DimensionError(f"partial_trace expects a 4x4 matrix, got {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ikjk->ij", r)
    if keep == "B":
        return np.einsum("kikj->ij", r)
    raise DimensionError(f"keep must be 'A' or 'B', got {keep!r}")


def hermitian_eigen(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues real and sorted
    descending, eigenvectors as orthonormal columns.  The input is
    symmetrized before decomposing; deviations from Hermiticity beyond
    ``HERMITICITY_ATOL`` raise :class:`NotHermitianError`.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError("hermitian_eigen expects a square matrix")
    dev = np.max(np.abs(m - m.conj().T))
    if dev > HERMITICITY_ATOL:
        raise NotHermitianError(f"matrix deviates from Hermiticity by {dev:.3e}")
    sym = (m + m.conj().T) / 2
    w, v = np.linalg.eigh(sym)
    return w[::-1], v[:, ::-1]


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -Tr(rho log2 rho) in bits of a unit-trace PSD matrix.

    Eigenvalues in ``[EIGENVALUE_CLAMP, 0)`` are clamped to zero and the
    spectrum is renormalized; anything more negative raises
    :class:`NotAStateError`.
    """
    w, _ = hermitian_eigen(rho)
    if w.min() < EIGENVALUE_CLAMP:
        raise NotAStateError(f"negative eigenvalue {w.min():.3e} beyond clamp tolerance")
    w = np.clip(w, 0.0, None)
    w = w / w.sum()
    return _entropy_bits(w)


def shannon_entropy(p) -> float:
    """Shannon entropy in bits of a probability vector.

    Entries below ``-1e-12`` or a total differing from 1 by more than 1e-9
    raise :class:`DistributionError`; small negative noise is clamped, and
    ``0 log2 0`` counts as 0.
    """
    p = np.asarray(p, dtype=float).ravel()
    if p.min() < -1e-12:
        raise DistributionError(f"negative probability {p.min():.3e}")
    p = np.clip(p, 0.0, None)
    total = p.sum()
    if abs(total - 1.0) > 1e-9:
        raise DistributionError(f"probabilities sum to {total!r}, expected 1")
    return _entropy_bits(p)


def binary_entropy(q: float) -> float:
    """Entropy in bits of a (q, 1-q) distribution."""
    if q <= 0.0 or q >= 1.0:
        return 0.0
    return float(-q * np.log2(q) - (1 - q) * np.log2(1 - q))


def _entropy_bits(p: np.ndarray) -> float:
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum())
