"""Exceptions."""


class OversamplingConfigException(Exception):
    """Configuration exception base class."""

    pass


class InvalidResourceScheme(OversamplingConfigException):
    """Include reference uses an unsupported URL scheme."""

    pass


class NonExistingInclude(OversamplingConfigException):
    """Include reference does not exist."""

    pass


class IncludeCycle(OversamplingConfigException):
    """A file is included again by one of its own includes."""

    pass
