"""Shared exception types.

The CLI maps these onto exit codes, so everything user-facing should raise
one of them rather than a bare ValueError.
"""


class TreeSyntaxError(ValueError):
    """Malformed bracket notation. Carries the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(ValueError):
    """Input is well-formed but outside the domain of the operation."""


class ResourceLimitError(RuntimeError):
    """An exhaustive enumeration was requested above the configured size cap."""


class InvariantError(RuntimeError):
    """An internal consistency check failed (a bug, never a user error)."""
