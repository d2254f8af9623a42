"""Single-qubit CPTP maps in Kraus form and their local action on two qubits.

Each channel family is parametrized by a noise strength ``p`` in ``[0, 1]``.
The time-dependent dephasing constructor uses ``p(t) = 1 - exp(-gamma t)``,
the unique choice for which applying the channel to both qubits multiplies
the transverse correlation-tensor entries by ``exp(-2 gamma t)`` while the
longitudinal one stays fixed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ParameterError
from .linalg import IDENTITY_2, PAULIS, tensor_product
from .states import DensityMatrix

_COMPLETENESS_ATOL = 1e-10


def _check_prob(p: float, name: str = "p") -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"{name}={p!r} outside [0, 1]")
    return p


@dataclass(frozen=True)
class KrausChannel:
    """An ordered set of 2x2 Kraus operators with a completeness certificate.

    ``sum_j op^dag op = I`` is verified at construction (trace preservation);
    the Kraus rank is between 1 and 4.
    """

    ops: tuple[np.ndarray, ...]
    label: str
    p: float

    def __post_init__(self):
        ops = tuple(np.array(op, dtype=complex) for op in self.ops)
        if not 1 <= len(ops) <= 4:
            raise ParameterError(f"Kraus rank {len(ops)} outside [1, 4]")
        for op in ops:
            if op.shape != (2, 2):
                raise DimensionError(f"Kraus operator has shape {op.shape}, expected 2x2")
            op.setflags(write=False)
        total = sum(op.conj().T @ op for op in ops)
        dev = np.max(np.abs(total - IDENTITY_2))
        if dev > _COMPLETENESS_ATOL:
            raise ParameterError(f"Kraus completeness violated by {dev:.3e}")
        object.__setattr__(self, "ops", ops)

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """Single-qubit action ``sum_j op rho op^dag``."""
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (2, 2):
            raise DimensionError(f"expected a 2x2 matrix, got {rho.shape}")
        out = np.zeros((2, 2), dtype=complex)
        for op in self.ops:
            out += op @ rho @ op.conj().T
        return out


def _build(ops, label: str, p: float) -> KrausChannel:
    # drop numerically zero operators so p = 0 collapses to the identity map
    kept = tuple(op for op in ops if np.max(np.abs(op)) > 1e-15)
    return KrausChannel(ops=kept, label=label, p=p)


def identity_channel() -> KrausChannel:
    """The do-nothing channel, represented with a single identity operator."""
    return KrausChannel(ops=(IDENTITY_2,), label="identity", p=0.0)


def depolarizing(p: float) -> KrausChannel:
    """Uniform Pauli noise: ``sqrt(1-p) I`` plus ``sqrt(p/3) sigma_i``."""
    p = _check_prob(p)
    ops = [np.sqrt(1 - p) * IDENTITY_2] + [np.sqrt(p / 3) * s for s in PAULIS]
    return _build(ops, "depolarizing", p)


def amplitude_damping(p: float) -> KrausChannel:
    """Decay of the excited state: ``|1> -> |0>`` with probability ``p``."""
    p = _check_prob(p)
    g0 = np.array([[1, 0], [0, np.sqrt(1 - p)]], dtype=complex)
    g1 = np.array([[0, np.sqrt(p)], [0, 0]], dtype=complex)
    return _build([g0, g1], "amplitude_damping", p)


def phase_damping(p: float) -> KrausChannel:
    """Dephasing in the computational basis: coherences shrink by ``1 - p``.

    Kraus operators ``sqrt(1 - p/2) I`` and ``sqrt(p/2) sigma_z``; the
    populations are untouched.
    """
    p = _check_prob(p)
    g0 = np.sqrt(1 - p / 2) * IDENTITY_2
    g1 = np.sqrt(p / 2) * PAULIS[2]
    return _build([g0, g1], "phase_damping", p)


def phase_damping_at_time(gamma: float, t: float) -> KrausChannel:
    """Dephasing accumulated after time ``t`` at rate ``gamma``.

    Applying the result to both qubits of a state with diagonal correlation
    tensor gives ``c1(t) = c1(0) exp(-2 gamma t)``, same for ``c2``, with
    ``c3`` constant.
    """
    if gamma < 0:
        raise ParameterError(f"gamma={gamma!r} must be nonnegative")
    if t < 0:
        raise ParameterError(f"t={t!r} must be nonnegative")
    return phase_damping(-float(np.expm1(-gamma * t)))


_CHANNEL_FAMILIES = {
    "depolarizing": depolarizing,
    "amplitude_damping": amplitude_damping,
    "phase_damping": phase_damping,
}


def channel_family(name: str):
    """Constructor for a named channel family."""
    try:
        return _CHANNEL_FAMILIES[name]
    except KeyError:
        raise ParameterError(
            f"unknown channel family {name!r}; expected one of {sorted(_CHANNEL_FAMILIES)}"
        ) from None


def bloch_action(channel: KrausChannel) -> tuple[np.ndarray, np.ndarray]:
    """Affine Bloch-ball action ``r -> M r + m`` of a channel family.

    The matrices are the analytically derived single-qubit transfer maps,
    independent of the Kraus representation; :func:`apply_local` can be
    cross-checked against them.
    """
    p = channel.p
    if channel.label == "identity":
        return np.eye(3), np.zeros(3)
    if channel.label == "phase_damping":
        return np.diag([1 - p, 1 - p, 1.0]), np.zeros(3)
    if channel.label == "depolarizing":
        return (1 - 4 * p / 3) * np.eye(3), np.zeros(3)
    if channel.label == "amplitude_damping":
        s = np.sqrt(1 - p)
        return np.diag([s, s, 1 - p]), np.array([0.0, 0.0, p])
    raise ParameterError(f"no Bloch action known for channel {channel.label!r}")


def apply_local(
    rho: DensityMatrix,
    channel_a: KrausChannel | None = None,
    channel_b: KrausChannel | None = None,
) -> DensityMatrix:
    """Apply independent channels to the two qubits.

    ``None`` means leave that side untouched.  The result is
    ``sum_jk (G_j ox G_k) rho (G_j ox G_k)^dag``.
    """
    ch_a = identity_channel() if channel_a is None else channel_a
    ch_b = identity_channel() if channel_b is None else channel_b
    out = np.zeros((4, 4), dtype=complex)
    for ga in ch_a.ops:
        for gb in ch_b.ops:
            k = tensor_product(ga, gb)
            out += k @ rho.mat @ k.conj().T
    return DensityMatrix(out)
