"""Exception types shared across the package.

Each class carries the process exit code the command-line front end maps it to.
"""


class KCoverError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ArgumentError(KCoverError, ValueError):
    """An argument is outside the supported domain."""

    exit_code = 2


class InvalidCoverError(ArgumentError):
    """A family of sets fails the constructive-cover conditions."""


class ResourceCapError(KCoverError):
    """An instance exceeds a configured size cap and was refused."""

    exit_code = 3


class ConsistencyError(KCoverError):
    """Two computations that must agree did not; indicates a bug."""

    exit_code = 4
