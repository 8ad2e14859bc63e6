"""Exception types shared across the package."""


class VortexMCError(Exception):
    """Base class for all package errors."""


class ExcludedPathsError(VortexMCError):
    """More than the tolerated fraction of sample paths was excluded."""


class DimensionError(VortexMCError):
    """Operation called with an unsupported spatial dimension."""


class UnsupportedDomainError(VortexMCError):
    """Operation not defined on the given domain kind."""


class UnsupportedDriftError(VortexMCError):
    """Drift field outside the class the construction covers."""


class ResolutionError(VortexMCError):
    """Field structure is not resolved by the requested discretization."""


class StepSizeError(VortexMCError):
    """Iteration diverged; a smaller time step is required."""


class IndeterminateRateError(VortexMCError):
    """Growth-rate fit attempted on data consistent with zero signal."""


class ConfigError(VortexMCError):
    """Scenario configuration failed validation."""
