"""Exception hierarchy shared by all calculators."""


class RdfcError(Exception):
    """Base class for toolkit errors."""


class DomainError(RdfcError, ValueError):
    """An input lies outside the domain of the requested quantity."""


class SupportError(DomainError):
    """A point lies outside the support of a distribution."""


class RateError(DomainError):
    """The requested rate does not exceed the mutual information."""


class CapacityError(RdfcError):
    """An enumeration or codebook would exceed the configured cap."""


class NumericalError(RdfcError):
    """A numerical routine failed to reach its tolerance."""


class QuadratureError(NumericalError):
    """Adaptive quadrature did not converge within its evaluation budget."""


class DivergenceError(NumericalError):
    """An alpha-mutual information integral does not converge for this alpha."""


class MappingAmbiguityError(RdfcError):
    """The BSC-mixture parameter mapping could not be pinned down uniquely."""
