import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcorr.errors import DimensionError, DistributionError, NotAStateError, NotHermitianError
from qcorr.linalg import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Z,
    binary_entropy,
    hermitian_eigen,
    partial_trace,
    shannon_entropy,
    tensor_product,
    von_neumann_entropy,
)

# binary Shannon entropy of 0.8, evaluated as -0.8 log2 0.8 - 0.2 log2 0.2
H_08 = 0.7219280948873623

PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def random_complex(rng, n=2):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def random_hermitian(rng, n=4):
    m = random_complex(rng, n)
    return m + m.conj().T


def random_state_matrix(rng, n=4):
    g = random_complex(rng, n)
    m = g @ g.conj().T
    return m / np.real(np.trace(m))


class TestTensorProduct:
    def test_identity(self):
        np.testing.assert_array_equal(tensor_product(IDENTITY_2, IDENTITY_2), np.eye(4))

    def test_sigma_z_pair(self):
        expected = np.diag([1, -1, -1, 1]).astype(complex)
        np.testing.assert_array_equal(tensor_product(SIGMA_Z, SIGMA_Z), expected)

    def test_zero_factor(self):
        rng = np.random.default_rng(0)
        a = random_complex(rng)
        np.testing.assert_array_equal(tensor_product(a, np.zeros((2, 2))), np.zeros((4, 4)))

    def test_associative_and_bilinear(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            a, b, c = (random_complex(rng) for _ in range(3))
            left = tensor_product(tensor_product(a, b), c)
            right = tensor_product(a, tensor_product(b, c))
            np.testing.assert_allclose(left, right, atol=1e-12)
            x, y = rng.normal(size=2)
            np.testing.assert_allclose(
                tensor_product(x * a + y * b, c),
                x * tensor_product(a, c) + y * tensor_product(b, c),
                atol=1e-12,
            )

    def test_rejects_vectors(self):
        with pytest.raises(DimensionError):
            tensor_product(np.ones(2), IDENTITY_2)


class TestPartialTrace:
    def test_product_state_factorizes(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            rho_a = random_state_matrix(rng, 2)
            rho_b = random_state_matrix(rng, 2)
            joint = tensor_product(rho_a, rho_b)
            np.testing.assert_allclose(partial_trace(joint, "A"), rho_a, atol=1e-12)
            np.testing.assert_allclose(partial_trace(joint, "B"), rho_b, atol=1e-12)

    def test_bell_state_marginal_is_maximally_mixed(self):
        rho = np.outer(PHI_PLUS, PHI_PLUS.conj())
        np.testing.assert_allclose(partial_trace(rho, "A"), IDENTITY_2 / 2, atol=1e-12)

    def test_quantum_classical_state_marginal(self):
        rng = np.random.default_rng(3)
        rho0, rho1 = random_state_matrix(rng, 2), random_state_matrix(rng, 2)
        ket0, ket1 = np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)
        qc = 0.5 * tensor_product(rho0, np.outer(ket0, ket0)) + 0.5 * tensor_product(
            rho1, np.outer(ket1, ket1)
        )
        np.testing.assert_allclose(partial_trace(qc, "B"), np.diag([0.5, 0.5]), atol=1e-12)

    def test_scaled_factor_identity(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            x, y = random_complex(rng), random_complex(rng)
            expected = x * np.trace(y)
            np.testing.assert_allclose(
                partial_trace(tensor_product(x, y), "A"), expected, atol=1e-12
            )

    def test_preserves_trace(self):
        rng = np.random.default_rng(5)
        rho = random_state_matrix(rng)
        for keep in ("A", "B"):
            assert abs(np.trace(partial_trace(rho, keep)) - np.trace(rho)) < 1e-12

    def test_wrong_dimension(self):
        with pytest.raises(DimensionError):
            partial_trace(np.eye(2), "A")
        with pytest.raises(DimensionError):
            partial_trace(np.eye(4), "C")


class TestHermitianEigen:
    def test_diagonal(self):
        w, _ = hermitian_eigen(np.diag([0.7, 0.3]).astype(complex))
        np.testing.assert_allclose(w, [0.7, 0.3], atol=1e-12)

    def test_pauli_spectrum(self):
        w, _ = hermitian_eigen(SIGMA_X)
        np.testing.assert_allclose(w, [1, -1], atol=1e-12)

    def test_pure_projector(self):
        w, _ = hermitian_eigen(np.outer(PHI_PLUS, PHI_PLUS.conj()))
        np.testing.assert_allclose(w, [1, 0, 0, 0], atol=1e-12)

    def test_reconstruction_and_orthonormality(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            m = random_hermitian(rng)
            w, v = hermitian_eigen(m)
            assert np.all(np.diff(w) <= 1e-12)  # descending
            np.testing.assert_allclose((v * w) @ v.conj().T, m, atol=1e-9)
            np.testing.assert_allclose(v.conj().T @ v, np.eye(4), atol=1e-9)
            for i in range(4):
                np.testing.assert_allclose(m @ v[:, i], w[i] * v[:, i], atol=1e-9)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            hermitian_eigen(np.array([[0, 1], [0, 0]], dtype=complex))


class TestVonNeumannEntropy:
    def test_pure_state(self):
        assert von_neumann_entropy(np.outer(PHI_PLUS, PHI_PLUS.conj())) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_maximally_mixed(self):
        assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-12)

    def test_two_level_spectrum(self):
        rho = np.diag([0.8, 0.2, 0.0, 0.0]).astype(complex)
        assert von_neumann_entropy(rho) == pytest.approx(H_08, abs=1e-12)

    def test_unitary_invariance(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            rho = random_state_matrix(rng)
            g = random_complex(rng, 4)
            u, _ = np.linalg.qr(g)
            np.testing.assert_allclose(
                von_neumann_entropy(u @ rho @ u.conj().T),
                von_neumann_entropy(rho),
                atol=1e-9,
            )

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(NotAStateError):
            von_neumann_entropy(np.diag([1.1, -0.1]).astype(complex))


class TestShannonEntropy:
    def test_deterministic(self):
        assert shannon_entropy([1.0, 0.0]) == 0.0

    def test_uniform(self):
        assert shannon_entropy([0.5, 0.5]) == pytest.approx(1.0, abs=1e-12)

    def test_binary_08(self):
        assert shannon_entropy([0.8, 0.2]) == pytest.approx(H_08, abs=1e-12)

    def test_rejects_negative(self):
        with pytest.raises(DistributionError):
            shannon_entropy([1.2, -0.2])

    def test_rejects_bad_normalization(self):
        with pytest.raises(DistributionError):
            shannon_entropy([0.5, 0.4])

    @given(st.floats(min_value=0.0, max_value=1.0))
    @settings(max_examples=200)
    def test_matches_binary_entropy(self, q):
        assert shannon_entropy([q, 1 - q]) == pytest.approx(binary_entropy(q), abs=1e-12)
