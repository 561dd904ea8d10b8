"""
Exception hierarchy shared by all packages.

The CLI maps every RSDPError to exit code 2; a solver running out of
iterations is not an error and is reported through its outcome instead.
"""


class RSDPError(Exception):
    """Base class for all expected failures."""


class InputError(RSDPError):
    """Invalid parameters or a malformed input file."""


class ConfigError(RSDPError):
    """Inconsistent solver configuration or settings file."""


class FieldError(InputError):
    """Field construction or arithmetic failure."""


class UnsupportedZError(InputError):
    """No error-set construction exists for this z."""


class WorkLimitExceeded(RSDPError):
    """Exhaustive search refused because it exceeds the work limit."""


class DomainError(RSDPError, ValueError):
    """Entropy or cost-model argument outside its domain."""


class InfeasibleError(RSDPError):
    """The optimizer did not reach any feasible point."""


class ResamplePermutation(RSDPError):
    """Pivot block singular for this permutation; draw another one."""
