"""Exception hierarchy shared by every redlime module.

The CLI maps these onto exit codes: UsageError -> 1, ParseError -> 2,
DomainError and ResourceError -> 3.
"""


class RedlimeError(Exception):
    """Base class for all redlime errors."""


class UsageError(RedlimeError):
    """Caller broke an interface contract (mixed fields, bad lengths, bad flags)."""


class ParseError(RedlimeError):
    """Malformed text input: scalar token, matrix file, or signature string."""


class DomainError(RedlimeError):
    """Input is well-formed but outside the operation's mathematical domain."""


class ResourceError(RedlimeError):
    """An enumeration would exceed its configured budget."""
