"""Exception hierarchy shared across the package.

Physics-level errors (bad spacetime parameters, superradiant modes) are kept
distinct from programming-contract violations so the CLI can map them to
different exit codes.
"""


class PhysicsDomainError(ValueError):
    """Input is outside the physical domain of the requested quantity."""


class NakedSingularityError(PhysicsDomainError):
    """The rotating-metric horizon function has no positive root."""


class SuperradiantModeError(PhysicsDomainError):
    """Effective co-rotating frequency omega - m*Omega is non-positive."""


class TruncationError(PhysicsDomainError):
    """Requested Fock-space truncation is too small for the squeezing value."""


class ContractViolationError(RuntimeError):
    """An internal numerical contract was violated (e.g. asymmetric input)."""
