"""Two-qubit quantum-correlation measures and their open-system dynamics.

The package computes quantum mutual information, Henderson-Vedral classical
correlation, quantum discord and complementary correlations for arbitrary
two-qubit density matrices, evolves states under local Markovian Kraus
channels, and detects the sudden transition between classical- and
quantum-correlation decay under dephasing.
"""

from .channels import (
    KrausChannel,
    amplitude_damping,
    apply_local,
    bloch_action,
    channel_family,
    depolarizing,
    identity_channel,
    phase_damping,
    phase_damping_at_time,
)
from .correlations import (
    CorrelationReport,
    EntanglementClass,
    MeasurementDirection,
    classical_correlation,
    classical_correlation_grid,
    classify_by_complementary_correlations,
    complementary_correlation,
    conditional_entropy_after_measurement,
    discord,
    measurement_mutual_information,
    mutual_information,
    p_function,
)
from .dynamics import (
    CorrelationSample,
    Scenario,
    Trajectory,
    TransitionResult,
    ValidationReport,
    analytic_transition_time,
    detect_transition,
    evolve_trajectory,
    werner_closed_forms,
    werner_discord_comparison,
)
from .errors import (
    ComplementarityError,
    ConsistencyError,
    DimensionError,
    DistributionError,
    FormulaDomainError,
    NotAStateError,
    NotHermitianError,
    ParameterError,
)
from .linalg import (
    binary_entropy,
    hermitian_eigen,
    partial_trace,
    shannon_entropy,
    tensor_product,
    von_neumann_entropy,
)
from .states import (
    BellDiagonalCoeffs,
    DensityMatrix,
    FanoForm,
    bell_diagonal,
    bloch_rotation_unitary,
    diagonalize_correlation_tensor,
    extract_fano,
    from_fano,
    random_bell_diagonal,
    random_density_matrix,
    random_qc_state,
    random_single_qubit_state,
    random_unitary,
    schmidt_pure,
    werner,
)

__version__ = "0.1.0"

__all__ = [
    "BellDiagonalCoeffs",
    "ComplementarityError",
    "ConsistencyError",
    "CorrelationReport",
    "CorrelationSample",
    "DensityMatrix",
    "DimensionError",
    "DistributionError",
    "EntanglementClass",
    "FanoForm",
    "FormulaDomainError",
    "KrausChannel",
    "MeasurementDirection",
    "NotAStateError",
    "NotHermitianError",
    "ParameterError",
    "Scenario",
    "Trajectory",
    "TransitionResult",
    "ValidationReport",
    "amplitude_damping",
    "analytic_transition_time",
    "apply_local",
    "bell_diagonal",
    "binary_entropy",
    "bloch_action",
    "bloch_rotation_unitary",
    "channel_family",
    "classical_correlation",
    "classical_correlation_grid",
    "classify_by_complementary_correlations",
    "complementary_correlation",
    "conditional_entropy_after_measurement",
    "depolarizing",
    "detect_transition",
    "diagonalize_correlation_tensor",
    "discord",
    "evolve_trajectory",
    "extract_fano",
    "from_fano",
    "hermitian_eigen",
    "identity_channel",
    "measurement_mutual_information",
    "mutual_information",
    "p_function",
    "partial_trace",
    "phase_damping",
    "phase_damping_at_time",
    "random_bell_diagonal",
    "random_density_matrix",
    "random_qc_state",
    "random_single_qubit_state",
    "random_unitary",
    "schmidt_pure",
    "shannon_entropy",
    "tensor_product",
    "von_neumann_entropy",
    "werner",
    "werner_closed_forms",
    "werner_discord_comparison",
]
