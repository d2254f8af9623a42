"""Exception types shared across the package."""


class DimensionError(ValueError):
    """A matrix or vector does not have the required shape."""


class NotHermitianError(ValueError):
    """A matrix expected to be Hermitian deviates beyond tolerance."""


class NotAStateError(ValueError):
    """A matrix is not a valid density operator (trace, Hermiticity or positivity)."""


class DistributionError(ValueError):
    """A probability vector has negative entries or is badly normalized."""


class ParameterError(ValueError):
    """A scalar parameter lies outside its admissible range."""


class ComplementarityError(ValueError):
    """Two measurement axes are not complementary (Bloch vectors not orthogonal)."""


class FormulaDomainError(ValueError):
    """A closed-form expression was evaluated outside its domain of validity."""


class ConsistencyError(RuntimeError):
    """Two independent computation routes disagree beyond tolerance."""
