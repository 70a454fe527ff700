"""Exception types shared across the package.

The HTTP layer maps these onto status codes, so mutating operations raise
the most specific class that applies.
"""


class GdmError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GdmError):
    """Input data violates a declared contract (bad value, bad shape)."""


class NotFoundError(GdmError):
    """A referenced session, participant or alternative does not exist."""


class PhaseError(GdmError):
    """Operation attempted outside the session phase that allows it."""


class DuplicateError(GdmError):
    """A participant re-submitted something they may submit only once."""


class NoDiscussionSignalError(GdmError):
    """An alternative has no sentiment/emotion signal to aggregate."""
