"""Exception hierarchy shared by every forcelab module."""


class ForcelabError(Exception):
    """Base class for all library errors."""


class DomainError(ForcelabError, ValueError):
    """An argument lies outside the domain of an operation (bad vertex id, ambient mismatch)."""


class ParameterError(ForcelabError, ValueError):
    """Generator parameters violate a validated bound."""


class PreconditionError(ForcelabError, ValueError):
    """A documented precondition of an operation does not hold."""


class UnsupportedError(ForcelabError):
    """The instance exceeds a configured size cap."""
