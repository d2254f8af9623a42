"""Two-qubit density matrices: construction, validation and Bloch decomposition.

Conventions used throughout:

* computational basis ordered ``|00>, |01>, |10>, |11>``;
* Pauli axes ordered ``(x, y, z)``;
* a state decomposes as ``rho = (1/4) (I ox I + a.sigma ox I + I ox b.sigma
  + sum_nm T[n,m] sigma_n ox sigma_m)`` with local Bloch vectors ``a``, ``b``
  and the 3x3 correlation tensor ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.transform import Rotation

from .errors import DimensionError, NotAStateError
from .linalg import (
    EIGENVALUE_CLAMP,
    HERMITICITY_ATOL,
    IDENTITY_2,
    PAULIS,
    tensor_product,
)

_TRACE_ATOL = 1e-10

# kron(basis[n], basis[m]) for basis = (I, sx, sy, sz); index 0 is the identity
_PAULI_BASIS = (IDENTITY_2,) + PAULIS
KRON_BASIS = np.array(
    [[np.kron(p, q) for q in _PAULI_BASIS] for p in _PAULI_BASIS]
)

_KET_00 = np.array([1, 0, 0, 0], dtype=complex)
_KET_11 = np.array([0, 0, 0, 1], dtype=complex)
_BELL_KETS = {
    "phi_plus": np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2),
    "phi_minus": np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2),
    "psi_plus": np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2),
    "psi_minus": np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2),
}


def _frozen_array(x, dtype) -> np.ndarray:
    out = np.array(x, dtype=dtype)
    out.setflags(write=False)
    return out


def _fano_matrix(a: np.ndarray, b: np.ndarray, tensor: np.ndarray) -> np.ndarray:
    coeff = np.empty((4, 4))
    coeff[0, 0] = 1.0
    coeff[1:, 0] = a
    coeff[0, 1:] = b
    coeff[1:, 1:] = tensor
    return 0.25 * np.einsum("nm,nmij->ij", coeff, KRON_BASIS)


@dataclass(frozen=True)
class DensityMatrix:
    """A valid two-qubit state: 4x4, Hermitian, unit trace, positive semidefinite.

    Validation happens at construction; instances are immutable and safe to
    share between threads.
    """

    mat: np.ndarray

    def __post_init__(self):
        mat = np.array(self.mat, dtype=complex)
        if mat.shape != (4, 4):
            raise DimensionError(f"expected a 4x4 matrix, got {mat.shape}")
        dev = np.max(np.abs(mat - mat.conj().T))
        if dev > HERMITICITY_ATOL:
            raise NotAStateError(f"matrix deviates from Hermiticity by {dev:.3e}")
        tr = mat.trace()
        if abs(tr - 1.0) > _TRACE_ATOL:
            raise NotAStateError(f"trace is {tr!r}, expected 1")
        lo = float(np.linalg.eigvalsh((mat + mat.conj().T) / 2).min())
        if lo < EIGENVALUE_CLAMP:
            raise NotAStateError(f"negative eigenvalue {lo:.3e}")
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    def reduced(self, subsystem: str) -> np.ndarray:
        """Reduced 2x2 density matrix of subsystem ``"A"`` or ``"B"``."""
        from .linalg import partial_trace

        return partial_trace(self.mat, subsystem)

    def purity(self) -> float:
        return float(np.real(np.trace(self.mat @ self.mat)))


@dataclass(frozen=True)
class FanoForm:
    """Bloch decomposition of a two-qubit state.

    ``a`` and ``b`` are the local Bloch vectors, ``tensor`` the 3x3
    correlation tensor with entries ``Tr(rho sigma_n ox sigma_m)``.
    Construction checks that the decomposition reassembles into a valid
    state.
    """

    a: np.ndarray
    b: np.ndarray
    tensor: np.ndarray

    def __post_init__(self):
        a = _frozen_array(self.a, float)
        b = _frozen_array(self.b, float)
        tensor = _frozen_array(self.tensor, float)
        if a.shape != (3,) or b.shape != (3,):
            raise DimensionError("Bloch vectors must have shape (3,)")
        if tensor.shape != (3, 3):
            raise DimensionError("correlation tensor must have shape (3, 3)")
        if np.linalg.norm(a) > 1 + 1e-9 or np.linalg.norm(b) > 1 + 1e-9:
            raise NotAStateError("Bloch vector norm exceeds 1")
        if np.max(np.abs(tensor)) > 1 + 1e-9:
            raise NotAStateError("correlation tensor entry outside [-1, 1]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "tensor", tensor)
        lo = float(np.linalg.eigvalsh(_fano_matrix(a, b, tensor)).min())
        if lo < EIGENVALUE_CLAMP:
            raise NotAStateError(
                f"decomposition does not describe a state (eigenvalue {lo:.3e})"
            )

    def matrix(self) -> np.ndarray:
        return _fano_matrix(self.a, self.b, self.tensor)


@dataclass(frozen=True)
class BellDiagonalCoeffs:
    """Diagonal correlation-tensor entries ``(c1, c2, c3)`` of a Bell-diagonal state.

    The four Bell-basis weights must all be nonnegative for the triple to
    describe a state.
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        if max(abs(self.c1), abs(self.c2), abs(self.c3)) > 1 + 1e-12:
            raise NotAStateError("coefficients must lie in [-1, 1]")
        lo = min(self.bell_weights)
        if lo < -1e-12:
            raise NotAStateError(f"negative Bell-basis weight {lo:.3e}")

    @property
    def bell_weights(self) -> tuple[float, float, float, float]:
        """Weights on ``(|phi+>, |phi->, |psi+>, |psi->)`` projectors.

        Follows from the Pauli expectation values of the Bell states:
        ``phi+- -> (+-1, -+1, 1)`` and ``psi+- -> (+-1, +-1, -1)`` on the
        ``(xx, yy, zz)`` observables.
        """
        c1, c2, c3 = self.c1, self.c2, self.c3
        return (
            (1 + c1 - c2 + c3) / 4,
            (1 - c1 + c2 + c3) / 4,
            (1 + c1 + c2 - c3) / 4,
            (1 - c1 - c2 - c3) / 4,
        )


def from_fano(f: FanoForm) -> DensityMatrix:
    """Assemble the density matrix of a Bloch decomposition."""
    return DensityMatrix(f.matrix())


def extract_fano(rho: DensityMatrix) -> FanoForm:
    """Bloch decomposition of a state via Pauli expectation values."""
    full = np.einsum("nmij,ji->nm", KRON_BASIS, rho.mat).real
    return FanoForm(a=full[1:, 0], b=full[0, 1:], tensor=full[1:, 1:])


def bell_diagonal(coeffs: BellDiagonalCoeffs) -> DensityMatrix:
    """State with maximally mixed marginals and diagonal correlation tensor.

    Built as the Bell-basis mixture with the weights of
    :attr:`BellDiagonalCoeffs.bell_weights`; identical to
    ``from_fano(a=0, b=0, diag(c1, c2, c3))``.
    """
    mat = np.zeros((4, 4), dtype=complex)
    for w, name in zip(coeffs.bell_weights, ("phi_plus", "phi_minus", "psi_plus", "psi_minus")):
        ket = _BELL_KETS[name]
        mat += w * np.outer(ket, ket.conj())
    return DensityMatrix(mat)


def werner(beta: float) -> DensityMatrix:
    """Mixture of singlet fraction ``beta`` with the maximally mixed state.

    Valid for ``beta`` in ``[-1/3, 1]``; the eigenvalues are
    ``(1 + 3 beta)/4`` on the singlet and ``(1 - beta)/4`` elsewhere.
    """
    if not -1 / 3 - 1e-12 <= beta <= 1 + 1e-12:
        raise NotAStateError(f"beta={beta!r} outside [-1/3, 1]")
    ket = _BELL_KETS["psi_minus"]
    mat = beta * np.outer(ket, ket.conj()) + (1 - beta) * np.eye(4, dtype=complex) / 4
    return DensityMatrix(mat)


def schmidt_pure(theta: float) -> DensityMatrix:
    """Projector onto ``cos(theta)|00> + sin(theta)|11>``.

    ``theta`` in ``(0, pi/2)`` gives an entangled state; the correlation
    tensor is ``diag(sin 2theta, -sin 2theta, 1)``.
    """
    ket = np.cos(theta) * _KET_00 + np.sin(theta) * _KET_11
    return DensityMatrix(np.outer(ket, ket.conj()))


def bloch_rotation_unitary(rotation: np.ndarray) -> np.ndarray:
    """SU(2) element whose Bloch-sphere action is the given rotation matrix.

    Satisfies ``U (n.sigma) U^dag = (R n).sigma``.
    """
    rotvec = Rotation.from_matrix(np.asarray(rotation, dtype=float)).as_rotvec()
    angle = float(np.linalg.norm(rotvec))
    axis = rotvec / angle if angle > 1e-12 else np.array([0.0, 0.0, 1.0])
    n_sigma = axis[0] * PAULIS[0] + axis[1] * PAULIS[1] + axis[2] * PAULIS[2]
    return np.cos(angle / 2) * IDENTITY_2 - 1j * np.sin(angle / 2) * n_sigma


def diagonalize_correlation_tensor(
    rho: DensityMatrix,
) -> tuple[DensityMatrix, np.ndarray, np.ndarray]:
    """Local unitaries that make the correlation tensor diagonal.

    Returns ``(rho_diag, u1, u2)`` with
    ``rho_diag = (u1 ox u2) rho (u1 ox u2)^dag``.  The rotations come from
    the real SVD of the tensor with a determinant-sign fix so both are
    proper; the diagonal entries then equal the singular values up to one
    sign.  A tensor that is already diagonal returns identity unitaries.
    """
    f = extract_fano(rho)
    t = np.array(f.tensor)
    if np.max(np.abs(t - np.diag(np.diag(t)))) < 1e-12:
        return rho, np.array(IDENTITY_2), np.array(IDENTITY_2)

    w, _, vt = np.linalg.svd(t)
    if np.linalg.det(w) < 0:
        w = w.copy()
        w[:, -1] *= -1
    if np.linalg.det(vt) < 0:
        vt = vt.copy()
        vt[-1, :] *= -1
    # T' = O1 T O2^T diagonal for O1 = W^T, O2 = Vt
    u1 = bloch_rotation_unitary(w.T)
    u2 = bloch_rotation_unitary(vt)
    local = tensor_product(u1, u2)
    return DensityMatrix(local @ rho.mat @ local.conj().T), u1, u2


def random_density_matrix(rng: np.random.Generator | None = None) -> DensityMatrix:
    """Full-rank random state from the Ginibre ensemble."""
    rng = np.random.default_rng() if rng is None else rng
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    mat = g @ g.conj().T
    return DensityMatrix(mat / np.real(mat.trace()))


def random_single_qubit_state(rng: np.random.Generator | None = None) -> np.ndarray:
    rng = np.random.default_rng() if rng is None else rng
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    mat = g @ g.conj().T
    return mat / np.real(mat.trace())


def random_unitary(rng: np.random.Generator | None = None) -> np.ndarray:
    """Haar-random 2x2 unitary via QR of a Ginibre matrix."""
    rng = np.random.default_rng() if rng is None else rng
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_bell_diagonal(rng: np.random.Generator | None = None) -> BellDiagonalCoeffs:
    """Uniform random Bell-basis weights mapped back to tensor coefficients."""
    rng = np.random.default_rng() if rng is None else rng
    w = rng.dirichlet(np.ones(4))  # (phi+, phi-, psi+, psi-)
    return BellDiagonalCoeffs(
        c1=w[0] - w[1] + w[2] - w[3],
        c2=-w[0] + w[1] + w[2] - w[3],
        c3=w[0] + w[1] - w[2] - w[3],
    )


def random_qc_state(
    rng: np.random.Generator | None = None,
) -> tuple[DensityMatrix, np.ndarray]:
    """Random quantum-classical state ``sum_i p_i rho_A^i ox |i_B><i_B|``.

    Returns the state together with the Bloch vector of the classical basis
    on B (the measurement direction that reveals zero discord).
    """
    rng = np.random.default_rng() if rng is None else rng
    u = random_unitary(rng)
    basis = [u[:, 0], u[:, 1]]
    n = np.array(
        [
            np.real(np.conj(basis[0]) @ (p @ basis[0]))
            for p in PAULIS
        ]
    )
    p0 = rng.uniform(0.1, 0.9)
    weights = (p0, 1 - p0)
    mat = np.zeros((4, 4), dtype=complex)
    for w, ket in zip(weights, basis):
        mat += w * tensor_product(random_single_qubit_state(rng), np.outer(ket, ket.conj()))
    return DensityMatrix(mat), n
