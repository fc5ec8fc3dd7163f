"""Exception hierarchy shared by all lieadm modules."""

from __future__ import annotations


class LieadmError(Exception):
    """Base class for every error raised by this package."""


class InputError(LieadmError):
    """Malformed user input: bad JSON, unknown names, out-of-range indices."""


class PreconditionError(LieadmError):
    """An operation was invoked on data that violates its stated preconditions."""


class ContractViolationError(LieadmError):
    """An internal cross-check failed.

    Raised when two independent routes to the same quantity disagree.  This
    always indicates a bug in the package, never bad user input.
    """


class FixtureError(LieadmError):
    """A built-in example algebra failed its load-time validation."""
